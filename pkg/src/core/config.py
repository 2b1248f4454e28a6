from pathlib import Path
from typing import Optional
from pydantic import BaseModel, Field
import toml
import os

import logging
logger = logging.getLogger(__name__)


class SystemConfig(BaseModel):
    """Configuration for system settings."""
    log_level: str = Field(default="WARNING", description="Logging level")
    log_dir: Optional[Path] = Field(default=None, description="Directory for rotating log files (console only when unset)")


class OracleConfig(BaseModel):
    """Limits of the exact oracles."""
    max_incidences: int = Field(default=40, ge=1, description="Largest incidence count the backtracking search accepts")
    max_minor_vertices: int = Field(default=10, ge=1, description="Largest vertex count the minor test accepts")


class GeneratorConfig(BaseModel):
    """Defaults of the random outerplanar generator."""
    chord_keep_probability: float = Field(default=0.5, ge=0.0, le=1.0, description="Probability of keeping each chord")
    hull_delete_probability: float = Field(default=0.2, ge=0.0, le=1.0, description="Probability of deleting each hull edge")
    seed: int = Field(default=0, ge=0, description="Default seed")


class SuiteConfig(BaseModel):
    """Scale of the acceptance suites."""
    theorem_instances: int = Field(default=1000, ge=0, description="Random instances in the theorem property suite")
    theorem_max_n: int = Field(default=2000, ge=3, description="Largest random instance")
    lemma_max_n: int = Field(default=7, ge=2, le=7, description="Largest n of the exhaustive configuration check")
    exhaustive_theorem_max_n: int = Field(default=6, ge=2, le=7, description="Largest n compared against the oracle")
    mutation_colorings: int = Field(default=100, ge=0, description="Colorings mutated by the verifier suite")
    mutation_max_n: int = Field(default=50, ge=3, description="Largest graph in the verifier suite")
    base_max_n: int = Field(default=1000, ge=3, description="Longest cycle and path given to the base colorer")
    seed: int = Field(default=0, ge=0, description="Seed of the suite instance stream")


class MetricsConfig(BaseModel):
    """Configuration for metrics export."""
    enabled: bool = Field(default=False, description="Collect metrics")
    type: str = Field(default="prometheus", description="Type of metrics collector")
    textfile: Optional[Path] = Field(default=None, description="Write collected metrics to this file on exit")


class Config(BaseModel):
    """Main configuration model."""
    system: SystemConfig = Field(default_factory=SystemConfig)
    oracle: OracleConfig = Field(default_factory=OracleConfig)
    generator: GeneratorConfig = Field(default_factory=GeneratorConfig)
    suites: SuiteConfig = Field(default_factory=SuiteConfig)
    metrics: MetricsConfig = Field(default_factory=MetricsConfig)

    @classmethod
    def from_toml(cls, toml_str: str) -> 'Config':
        """Create a Config instance from a TOML string."""
        try:
            config_dict = toml.loads(toml_str)
            return cls(**config_dict)
        except Exception as e:
            raise ValueError(f"Failed to parse TOML configuration: {e}")

    @classmethod
    def from_file(cls, file_path: Path) -> 'Config':
        """Create a Config instance from a TOML file."""
        try:
            with open(file_path, 'r') as f:
                return cls.from_toml(f.read())
        except Exception as e:
            raise ValueError(f"Failed to read configuration file {file_path}: {e}")

    def selftest(self) -> SuiteConfig:
        """Reduced-scale suite settings, capped by the configured ones."""
        full = self.suites
        return SuiteConfig(
            theorem_instances=min(full.theorem_instances, 60),
            theorem_max_n=min(full.theorem_max_n, 200),
            lemma_max_n=min(full.lemma_max_n, 6),
            exhaustive_theorem_max_n=min(full.exhaustive_theorem_max_n, 5),
            mutation_colorings=min(full.mutation_colorings, 10),
            mutation_max_n=min(full.mutation_max_n, 20),
            base_max_n=min(full.base_max_n, 100),
            seed=full.seed,
        )

    def expand_paths(self) -> 'Config':
        """Expand all path variables to absolute paths."""
        if self.system.log_dir:
            self.system.log_dir = Path(os.path.expanduser(str(self.system.log_dir)))
        if self.metrics.textfile:
            self.metrics.textfile = Path(os.path.expanduser(str(self.metrics.textfile)))
        return self
