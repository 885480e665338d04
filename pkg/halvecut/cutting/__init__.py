from .backoff import SampleBackoff
from .construct import simple_weak_cutting, trapezoid_loads, weak_cutting
from .models import SAMPLED, VERTICAL_REFINEMENT, Cutting, CuttingParams, CuttingStats
from .sampling import net_sample_size, sample_net, weighted_draws
from .verify import CuttingReport, verify_cutting
from .weights import WeightedLineSet

__all__ = [
    "SAMPLED",
    "VERTICAL_REFINEMENT",
    "Cutting",
    "CuttingParams",
    "CuttingReport",
    "CuttingStats",
    "SampleBackoff",
    "WeightedLineSet",
    "net_sample_size",
    "sample_net",
    "simple_weak_cutting",
    "trapezoid_loads",
    "verify_cutting",
    "weak_cutting",
]
