from functools import lru_cache
from pathlib import Path

from pydantic_settings import BaseSettings

from simplexcenters.models.geometry import Tolerance

PACKAGE_DIR = Path(__file__).resolve().parent.parent


class Settings(BaseSettings):
    # Application
    app_name: str = "simplexcenters"
    app_description: str = "Centers, facial structure and counterexamples of d-simplices"
    app_version: str = "0.1.0"
    log_level: str = "INFO"

    # Tolerance policy
    abs_tol: float = 1e-9
    rel_tol: float = 1e-8

    # Fermat-Torricelli solver
    weiszfeld_max_iterations: int = 100_000
    weiszfeld_restep_offset: float = 1e-6

    # Scalar root finding for the constructions
    bisection_xtol: float = 1e-12
    bisection_max_iterations: int = 200

    # Classification
    equifacetal_max_dimension: int = 7

    # Random corpora
    corpus_min_conditioning: float = 1e-4
    corpus_max_retries: int = 1000

    # Construction knobs
    split_sum_margin: float = 0.1
    if_base_scan_delta: float = 0.05

    # Config file paths
    constructions_config_path: str = str(PACKAGE_DIR / "config" / "constructions.yaml")
    verification_config_path: str = str(PACKAGE_DIR / "config" / "verification.yaml")
    fixtures_dir: str = str(PACKAGE_DIR / "fixtures")

    model_config = {"env_file": ".env", "env_prefix": "SIMPLEX_", "extra": "allow"}

    def tolerance(self) -> Tolerance:
        return Tolerance(abs_tol=self.abs_tol, rel_tol=self.rel_tol)


@lru_cache
def get_settings() -> Settings:
    return Settings()
