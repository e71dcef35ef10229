# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""Datasets of relit scene pairs: generation, loading, augmentation and batching."""

# Standard library
import logging
import os
from collections import deque
from collections.abc import Iterator, Sequence
from concurrent.futures import Future, ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

# Third party
import numpy as np

# Local
from ianrelight import exceptions
from ianrelight.config import (
    MAX_TEMPERATURE,
    MIN_TEMPERATURE,
    DatasetSpec,
    IANConfig,
    LightPolicy,
    LightSetting,
)
from ianrelight.core import OperationResult
from ianrelight.data.io import load_depth, load_image, save_depth, save_image
from ianrelight.data.render import mirror_scene, random_scene, render_lambertian
from ianrelight.data.sh import (
    angles_from_direction,
    direction_from_angles,
    mirror_direction,
    sh_from_direction,
    temperature_tint,
)
from ianrelight.models import LightRecord, Manifest, ManifestRecord, Scene

logger = logging.getLogger(__name__)

INPUT_DIR = 'input'
TARGET_DIR = 'target'
DEPTH_DIR = 'depth'
IMAGE_SUFFIX = '.png'


@dataclass(frozen=True, slots=True)
class ScenePair:
    r"""An input image and its relit target of the same scene.

    Parameters
    ----------
    name : str
        The name of the pair.

    input : numpy.ndarray
        The input image [3, H, W] in [0, 1].

    target : numpy.ndarray
        The target image [3, H, W] in [0, 1].

    depth : numpy.ndarray or None, default None
        The depth [1, H, W] in [0, 1].

    light_in : ianrelight.models.LightRecord or None, default None
        The light of the input image.

    light_out : ianrelight.models.LightRecord or None, default None
        The light of the target image.

    scene : ianrelight.models.Scene or None, default None
        The scene of a synthetic pair.
    """

    name: str
    input: np.ndarray
    target: np.ndarray
    depth: np.ndarray | None = None
    light_in: LightRecord | None = None
    light_out: LightRecord | None = None
    scene: Scene | None = None


def light_record(
    azimuth: float,
    elevation: float,
    temperature: float | None = None,
    intensity: float = 1.0,
) -> LightRecord:
    r"""Create the record of a directional light from its angles and color temperature."""

    direction = direction_from_angles(azimuth, elevation)
    tint = (1.0, 1.0, 1.0) if temperature is None else temperature_tint(temperature)

    return LightRecord(
        dir=tuple(float(c) for c in direction),
        sh9=sh_from_direction(direction, intensity=intensity).coefficients,
        azimuth=azimuth,
        elevation=elevation,
        temperature=temperature,
        tint=tint,
        intensity=intensity,
    )


def mirror_light(light: LightRecord) -> LightRecord:
    r"""Mirror a light at the north-south axis, e.g. a light from the west becomes east."""

    direction = mirror_direction(light.direction)
    return light.model_copy(
        update={
            'dir': tuple(float(c) for c in direction),
            'sh9': sh_from_direction(direction, intensity=light.intensity).coefficients,
            'azimuth': (360.0 - light.azimuth) % 360.0,
        }
    )


def hflip_pair(p: ScenePair) -> ScenePair:
    r"""Mirror a scene pair horizontally.

    The images, the depth and the scene are mirrored column-wise and both lights are mirrored,
    turning the azimuth a into 360 - a. Flipping twice restores the pair.
    """

    def flip(a: np.ndarray | None) -> np.ndarray | None:
        return None if a is None else np.ascontiguousarray(a[..., ::-1])

    return replace(
        p,
        input=flip(p.input),
        target=flip(p.target),
        depth=flip(p.depth),
        light_in=None if p.light_in is None else mirror_light(p.light_in),
        light_out=None if p.light_out is None else mirror_light(p.light_out),
        scene=None if p.scene is None else mirror_scene(p.scene),
    )


# ==================================================================================================
# Stored datasets
# ==================================================================================================


class RelightDataset(Sequence[ScenePair]):
    r"""A dataset of scene pairs stored as PNG files.

    Parameters
    ----------
    root : pathlib.Path
        The directory the file paths of the records are relative to.

    records : Sequence[ianrelight.models.ManifestRecord]
        The scene pairs.

    size : int
        The height and width of every image.

    manifest : ianrelight.models.Manifest or None, default None
        The manifest the records are taken from.
    """

    def __init__(
        self,
        root: Path,
        records: Sequence[ManifestRecord],
        size: int,
        manifest: Manifest | None = None,
    ) -> None:
        self.root = root
        self.records = list(records)
        self.size = size
        self.manifest = manifest

    def __repr__(self) -> str:
        return f'{type(self).__name__}(root={self.root!r}, pairs={len(self)}, size={self.size})'

    def __len__(self) -> int:
        return len(self.records)

    def __getitem__(self, index: int) -> ScenePair:  # type: ignore[override]
        record = self.records[index]
        image = load_image(self.root / record.input)
        target = load_image(self.root / record.target)
        depth = None if record.depth is None else load_depth(self.root / record.depth)

        for name, a in (('input', image), ('target', target), ('depth', depth)):
            if a is not None and a.shape[1:] != (self.size, self.size):
                raise exceptions.DatasetError(
                    f'The {name} of pair {record.id} has size {a.shape[1:]}, '
                    f'expected {self.size}x{self.size}!'
                )

        return ScenePair(
            name=Path(record.input).stem,
            input=image,
            target=target,
            depth=depth,
            light_in=record.light_in,
            light_out=record.light_out,
            scene=record.scene,
        )

    @property
    def has_depth(self) -> bool:
        return bool(self.records) and all(r.depth is not None for r in self.records)

    @property
    def has_lights(self) -> bool:
        return bool(self.records) and all(r.light_out is not None for r in self.records)

    @property
    def policy(self) -> LightPolicy | None:
        return None if self.manifest is None else self.manifest.policy

    def subset(self, indices: Sequence[int]) -> 'RelightDataset':
        r"""A dataset of the records at `indices`."""
        return type(self)(
            root=self.root,
            records=[self.records[i] for i in indices],
            size=self.size,
            manifest=self.manifest,
        )


def load_dataset(path: Path) -> RelightDataset:
    r"""Load the dataset described by the manifest in directory `path`.

    Raises
    ------
    ianrelight.DatasetError
        If the manifest cannot be read or lists no pairs.
    """

    manifest = Manifest.read(path)
    if not manifest.records:
        raise exceptions.DatasetError(f'The dataset in "{path}" is empty!')

    logger.info(f'Loaded manifest of {manifest.count} pairs from "{path}".')

    return RelightDataset(
        root=path, records=manifest.records, size=manifest.size, manifest=manifest
    )


def load_paired_directory(
    input_dir: Path, target_dir: Path, depth_dir: Path | None = None
) -> RelightDataset:
    r"""Pair the PNG images of an input and a target directory by their file name stem.

    Parameters
    ----------
    input_dir : pathlib.Path
        The directory of the input images.

    target_dir : pathlib.Path
        The directory of the target images.

    depth_dir : pathlib.Path or None, default None
        The directory of the depth maps, which must exist for every pair.

    Returns
    -------
    ianrelight.data.RelightDataset
        The dataset without lights.

    Raises
    ------
    ianrelight.DatasetError
        If no pairs are found or a depth map is missing.
    """

    inputs = {p.stem: p for p in sorted(input_dir.glob(f'*{IMAGE_SUFFIX}'))}
    targets = {p.stem: p for p in sorted(target_dir.glob(f'*{IMAGE_SUFFIX}'))}
    stems = sorted(inputs.keys() & targets.keys())

    if not stems:
        raise exceptions.DatasetError(
            f'No pairs of PNG images found in "{input_dir}" and "{target_dir}"!'
        )
    if unpaired := sorted(inputs.keys() ^ targets.keys()):
        logger.warning(f'Skipping {len(unpaired)} unpaired image(s): {unpaired[:5]}')

    records = []
    for i, stem in enumerate(stems):
        depth = None
        if depth_dir is not None:
            depth_path = depth_dir / f'{stem}{IMAGE_SUFFIX}'
            if not depth_path.exists():
                raise exceptions.DatasetError(f'Missing depth map "{depth_path}"!')
            depth = str(depth_path.resolve())

        records.append(
            ManifestRecord(
                id=i,
                input=str(inputs[stem].resolve()),
                target=str(targets[stem].resolve()),
                depth=depth,
            )
        )

    size = load_image(Path(records[0].input)).shape[1]
    logger.info(f'Paired {len(records)} images of size {size} from "{input_dir}".')

    return RelightDataset(root=Path(input_dir).resolve(), records=records, size=size)


# ==================================================================================================
# Generation
# ==================================================================================================


def _draw_light(rng: np.random.Generator, spec: DatasetSpec) -> LightSetting:
    return LightSetting(
        azimuth=float(rng.uniform(0.0, 360.0)),
        elevation=float(rng.uniform(spec.min_elevation, spec.max_elevation)),
        temperature=int(rng.integers(MIN_TEMPERATURE, MAX_TEMPERATURE + 1)),
    )


def _to_record(setting: LightSetting, intensity: float) -> LightRecord:
    return light_record(
        setting.azimuth, setting.elevation, temperature=setting.temperature, intensity=intensity
    )


def check_writable_directory(path: Path) -> OperationResult:
    r"""Check that `path` is, or can be created as, a writable directory."""

    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        return OperationResult(
            ok=False,
            short_msg=f'Cannot create directory "{path}"!',
            long_msg=str(e),
            code='mkdir',
        )

    if not os.access(path, os.W_OK):
        return OperationResult(ok=False, short_msg=f'Directory "{path}" is not writable!')

    return OperationResult()


def gen_dataset(spec: DatasetSpec, out_dir: Path) -> Manifest:
    r"""Render a synthetic dataset of scene pairs and write it with its manifest.

    The images are written to the sub-directories "input", "target" and "depth" of `out_dir`
    and the manifest to "manifest.json". The same `spec` always produces byte-identical files.

    Parameters
    ----------
    spec : ianrelight.config.DatasetSpec
        The specification of the dataset.

    out_dir : pathlib.Path
        The directory to write the dataset to.

    Returns
    -------
    ianrelight.models.Manifest
        The manifest of the dataset.

    Raises
    ------
    ianrelight.DatasetError
        If `out_dir` is not writable.
    """

    result = check_writable_directory(out_dir)
    if not result.ok:
        raise exceptions.DatasetError(f'{result.short_msg}\n{result.long_msg}'.strip())

    rng = np.random.default_rng(spec.seed)
    fixed_in = _to_record(spec.input_light, spec.intensity)
    fixed_out = _to_record(spec.target_light, spec.intensity)
    log_every = max(spec.count // 10, 1)

    records = []
    for i in range(spec.count):
        scene = random_scene(
            rng,
            size=spec.size,
            n_spheres=(spec.min_spheres, spec.max_spheres),
            radius=(spec.min_radius, spec.max_radius),
            albedo=(spec.min_albedo, spec.max_albedo),
        )
        if spec.policy == LightPolicy.FIXED:
            light_in, light_out = fixed_in, fixed_out
        else:
            light_in = _to_record(_draw_light(rng, spec), spec.intensity)
            light_out = _to_record(_draw_light(rng, spec), spec.intensity)

        renders = [
            render_lambertian(
                scene,
                light.direction,
                intensity=light.intensity,
                ambient=spec.ambient,
                tint=light.tint,
            )
            for light in (light_in, light_out)
        ]

        name = f'{i:04d}{IMAGE_SUFFIX}'
        save_image(renders[0].image, out_dir / INPUT_DIR / name)
        save_image(renders[1].image, out_dir / TARGET_DIR / name)
        save_depth(renders[0].depth, out_dir / DEPTH_DIR / name)

        records.append(
            ManifestRecord(
                id=i,
                input=f'{INPUT_DIR}/{name}',
                target=f'{TARGET_DIR}/{name}',
                depth=f'{DEPTH_DIR}/{name}',
                light_in=light_in,
                light_out=light_out,
                scene=scene,
            )
        )

        if (i + 1) % log_every == 0:
            logger.info(f'Generated {i + 1}/{spec.count} scene pairs.')

    manifest = Manifest(seed=spec.seed, size=spec.size, policy=spec.policy, records=records)
    path = manifest.write(out_dir)
    logger.info(f'Wrote manifest of {spec.count} pairs to "{path}".')

    return manifest


# ==================================================================================================
# Batches
# ==================================================================================================


@dataclass(frozen=True, slots=True)
class Batch:
    r"""A batch of scene pairs stacked along the first axis.

    Parameters
    ----------
    inputs : numpy.ndarray
        The input images [B, 3, H, W].

    targets : numpy.ndarray
        The target images [B, 3, H, W].

    depths : numpy.ndarray or None
        The depth maps [B, 1, H, W].

    lights : numpy.ndarray or None
        The SH coefficients of the target lights [B, 9].

    indices : tuple[int, ...]
        The indices of the pairs in the dataset.

    flipped : tuple[bool, ...]
        True for every pair that was mirrored.
    """

    inputs: np.ndarray
    targets: np.ndarray
    depths: np.ndarray | None
    lights: np.ndarray | None
    indices: tuple[int, ...]
    flipped: tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.indices)


def load_batch(
    dataset: Sequence[ScenePair], indices: Sequence[int], flips: Sequence[bool] | None = None
) -> Batch:
    r"""Load and stack the pairs at `indices`, mirroring those with a True flip."""

    _flips = [False] * len(indices) if flips is None else list(flips)
    pairs = []
    for i, flip in zip(indices, _flips, strict=True):
        pair = dataset[i]
        pairs.append(hflip_pair(pair) if flip else pair)

    depths = None
    if all(p.depth is not None for p in pairs):
        depths = np.stack([p.depth for p in pairs])  # type: ignore[misc]

    lights = None
    if all(p.light_out is not None for p in pairs):
        lights = np.stack([np.asarray(p.light_out.sh9) for p in pairs])  # type: ignore[union-attr]

    return Batch(
        inputs=np.stack([p.input for p in pairs]),
        targets=np.stack([p.target for p in pairs]),
        depths=depths,
        lights=lights,
        indices=tuple(int(i) for i in indices),
        flipped=tuple(bool(f) for f in _flips),
    )


def _batch_plans(
    n: int,
    batch_size: int,
    rng: np.random.Generator,
    augment: bool,
    shuffle: bool,
    epochs: int | None,
) -> Iterator[tuple[list[int], list[bool]]]:
    epoch = 0
    while epochs is None or epoch < epochs:
        order = rng.permutation(n) if shuffle else np.arange(n)
        flips = rng.random(n) < 0.5 if augment else np.zeros(n, dtype=bool)  # noqa: PLR2004
        for start in range(0, n, batch_size):
            stop = start + batch_size
            yield order[start:stop].tolist(), flips[start:stop].tolist()
        epoch += 1


def iterate_batches(
    dataset: Sequence[ScenePair],
    batch_size: int,
    seed: int | np.random.Generator = 0,
    augment: bool = False,
    num_workers: int = 0,
    epochs: int | None = None,
    shuffle: bool = True,
) -> Iterator[Batch]:
    r"""Iterate over batches of a dataset epoch by epoch.

    Every epoch visits the pairs in a new seeded order and ends with a partial batch if the
    size of the dataset is not divisible by `batch_size`. The order and the flips are drawn in
    the calling thread, so the delivered batches do not depend on `num_workers`.

    Parameters
    ----------
    dataset : Sequence[ianrelight.data.ScenePair]
        The dataset.

    batch_size : int
        The number of pairs of a full batch.

    seed : int or numpy.random.Generator, default 0
        The seed of the order and the flips, or a generator to draw them from.

    augment : bool, default False
        True if every pair is mirrored with probability 0.5.

    num_workers : int, default 0
        The number of background threads loading batches ahead. 0 loads in the calling thread.

    epochs : int or None, default None
        The number of epochs. None iterates forever.

    shuffle : bool, default True
        False to visit the pairs in dataset order.

    Yields
    ------
    ianrelight.data.Batch
        The batches.

    Raises
    ------
    ianrelight.DatasetError
        If the dataset is empty or `batch_size` is less than 1.
    """

    n = len(dataset)
    if n == 0:
        raise exceptions.DatasetError('Cannot iterate over an empty dataset!')
    if batch_size < 1:
        raise exceptions.DatasetError(f'batch_size must be at least 1, got {batch_size}!')

    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    plans = _batch_plans(n, batch_size, rng, augment=augment, shuffle=shuffle, epochs=epochs)

    if num_workers <= 0:
        for indices, flips in plans:
            yield load_batch(dataset, indices, flips)
        return

    pool_kwargs = {'max_workers': num_workers, 'thread_name_prefix': 'ianrelight-loader'}
    with ThreadPoolExecutor(**pool_kwargs) as pool:
        pending: deque[Future[Batch]] = deque()
        for indices, flips in plans:
            pending.append(pool.submit(load_batch, dataset, indices, flips))
            if len(pending) > 2 * num_workers:
                yield pending.popleft().result()

        while pending:
            yield pending.popleft().result()


def check_compatibility(dataset: RelightDataset, config: IANConfig) -> OperationResult:
    r"""Check that a dataset provides what a network configuration consumes.

    The network requires depth maps if it uses DGGE and target lights if it has a light
    projector. A dataset of random light pairs requires a light projector, since the input
    image alone does not determine the target. The image size must be divisible by
    :attr:`IANConfig.size_multiple` and match `config.image_size` if given.

    Returns
    -------
    ianrelight.OperationResult
        The result of the check. The code names the first failed check.
    """

    if len(dataset) == 0:
        return OperationResult(ok=False, short_msg='The dataset is empty!', code='empty')

    if config.use_dgge and not dataset.has_depth:
        return OperationResult(
            ok=False,
            short_msg='The network uses DGGE but the dataset has no depth maps!',
            code='depth',
        )

    if config.use_light_projector and not dataset.has_lights:
        return OperationResult(
            ok=False,
            short_msg='The network has a light projector but the dataset has no target lights!',
            code='light',
        )

    if dataset.policy == LightPolicy.RANDOM and not config.use_light_projector:
        return OperationResult(
            ok=False,
            short_msg='The dataset has random light pairs but the network has no light projector!',
            long_msg='Set model.use_light_projector = true to train on arbitrary relighting.',
            code='policy',
        )

    if dataset.size % config.size_multiple:
        return OperationResult(
            ok=False,
            short_msg=(
                f'The image size {dataset.size} is not divisible by {config.size_multiple}!'
            ),
            code='size',
        )

    if config.image_size is not None and config.image_size != dataset.size:
        return OperationResult(
            ok=False,
            short_msg=(
                f'The image size {dataset.size} differs from the configured '
                f'image_size {config.image_size}!'
            ),
            code='size',
        )

    return OperationResult()


def describe_light(light: LightRecord) -> str:
    r"""A short description of a light, e.g. "az 90.0° el 45.0° 6500K"."""

    azimuth, elevation = angles_from_direction(light.direction)
    temperature = '' if light.temperature is None else f' {light.temperature:.0f}K'
    return f'az {azimuth:.1f}° el {elevation:.1f}°{temperature}'
