from dataclasses import dataclass, field

from src.core.configs.avqite import AvqiteConfig
from src.core.configs.numerics import NumericsConfig
from src.core.configs.output import OutputConfig
from src.core.configs.sampling import SamplingConfig


@dataclass
class Settings:
    numerics: NumericsConfig = field(default_factory=NumericsConfig)
    avqite: AvqiteConfig = field(default_factory=AvqiteConfig)
    sampling: SamplingConfig = field(default_factory=SamplingConfig)
    output: OutputConfig = field(default_factory=OutputConfig)


settings = Settings()
