from .avqite import AvqiteConfig
from .numerics import NumericsConfig
from .output import OutputConfig
from .sampling import SamplingConfig
