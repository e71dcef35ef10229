# IANRelight
# Copyright (C) 2026-present The IANRelight developers
# SPDX-License-Identifier: GPL-3.0-or-later
# See the LICENSE file in the project root for details.

r"""The DataFrame models of the evaluation and accounting reports."""

# Standard library
from typing import ClassVar

# Local
from ianrelight.models.core import BaseDataFrameModel, DtypeMapping


class MetricsDataFrameModel(BaseDataFrameModel):
    r"""The image quality of relit images and of the copy baseline.

    One row per image with the label of the mean over all images as the last row.

    Parameters
    ----------
    image : str
        The name of the image, the index.

    psnr : float
        The PSNR in dB of the relit image. Identical images have +inf.

    ssim_rgb : float
        The SSIM averaged over the RGB channels.

    ssim_luma : float
        The SSIM of the BT.601 luma.

    copy_psnr : float
        The PSNR of the input image against the target.

    copy_ssim_rgb : float
        The RGB SSIM of the input image against the target.

    copy_ssim_luma : float
        The luma SSIM of the input image against the target.
    """

    MEAN_LABEL: ClassVar[str] = 'mean'

    c_image: ClassVar[str] = 'image'
    c_psnr: ClassVar[str] = 'psnr'
    c_ssim_rgb: ClassVar[str] = 'ssim_rgb'
    c_ssim_luma: ClassVar[str] = 'ssim_luma'
    c_copy_psnr: ClassVar[str] = 'copy_psnr'
    c_copy_ssim_rgb: ClassVar[str] = 'copy_ssim_rgb'
    c_copy_ssim_luma: ClassVar[str] = 'copy_ssim_luma'

    dtypes: ClassVar[DtypeMapping] = {
        c_image: 'string',
        c_psnr: 'float64',
        c_ssim_rgb: 'float64',
        c_ssim_luma: 'float64',
        c_copy_psnr: 'float64',
        c_copy_ssim_rgb: 'float64',
        c_copy_ssim_luma: 'float64',
    }
    index_cols: ClassVar[list[str]] = [c_image]

    @property
    def mean(self) -> dict[str, float]:
        r"""The mean row as a mapping of column to value."""
        return {str(k): float(v) for k, v in self.df.loc[self.MEAN_LABEL].items()}


class BreakdownDataFrameModel(BaseDataFrameModel):
    r"""The parameters and multiply-accumulates of each module of the network.

    Parameters
    ----------
    module : str
        The module, e.g. "dgge" or "level0.blocks", the index.

    layers : int
        The number of learnable layers.

    params : int
        The number of weights and biases.

    macs : int
        The multiply-accumulates of the convolutions and linear layers for one image.
    """

    c_module: ClassVar[str] = 'module'
    c_layers: ClassVar[str] = 'layers'
    c_params: ClassVar[str] = 'params'
    c_macs: ClassVar[str] = 'macs'

    dtypes: ClassVar[DtypeMapping] = {
        c_module: 'string',
        c_layers: 'int64',
        c_params: 'int64',
        c_macs: 'int64',
    }
    index_cols: ClassVar[list[str]] = [c_module]
