"""Number-theoretic Hilbert transforms over Z_m, a companion NTT, and
block-scrambling pipelines built from them."""

from .circulant import CirculantMatrix, ResidueVector
from .nht import Kind, NhtParams, NhtTransform, Relation, VerificationReport
from .ntt import NttTransform
from .pipeline import DataStream, PipelineSpec

__all__ = [
    "CirculantMatrix",
    "DataStream",
    "Kind",
    "NhtParams",
    "NhtTransform",
    "NttTransform",
    "PipelineSpec",
    "Relation",
    "ResidueVector",
    "VerificationReport",
]
