import yaml
from pathlib import Path
from typing import Dict, Any, Optional
import logging

from simplexcenters.models.errors import UnknownNameError

logger = logging.getLogger(__name__)


class ConfigLoader:
    """Service responsible for loading and caching the YAML registries"""

    def __init__(self, constructions_path: str, verification_path: str):
        self.constructions_path = Path(constructions_path)
        self.verification_path = Path(verification_path)

        # Cache for loaded configs
        self._constructions_cache: Optional[Dict[str, Any]] = None
        self._suites_cache: Optional[Dict[str, Any]] = None

    def get_constructions(self) -> Dict[str, Any]:
        """Load and cache the generator registry"""
        if self._constructions_cache is None:
            config = self._load_yaml(self.constructions_path)
            self._constructions_cache = config.get("constructions", {})
            logger.info(f"Loaded constructions registry from {self.constructions_path}")
        return self._constructions_cache

    def get_verification_suites(self) -> Dict[str, Any]:
        """Load and cache the theorem-suite registry"""
        if self._suites_cache is None:
            config = self._load_yaml(self.verification_path)
            self._suites_cache = config.get("suites", {})
            logger.info(f"Loaded verification suites from {self.verification_path}")
        return self._suites_cache

    def get_construction_config(self, name: str) -> Dict[str, Any]:
        """Get registry entry for one generator"""
        constructions = self.get_constructions()
        if name not in constructions:
            raise UnknownNameError(
                f"Unknown construction: {name}", available=sorted(constructions)
            )
        return constructions[name]

    def get_suite_config(self, theorem_id: str) -> Dict[str, Any]:
        """Get registry entry for one theorem suite"""
        suites = self.get_verification_suites()
        if theorem_id not in suites:
            raise UnknownNameError(
                f"Unknown theorem id: {theorem_id}", available=sorted(suites)
            )
        return suites[theorem_id]

    def _load_yaml(self, path: Path) -> Dict[str, Any]:
        """Load YAML file"""
        if not path.exists():
            raise FileNotFoundError(f"Configuration file not found: {path}")

        try:
            with open(path, "r", encoding="utf-8") as f:
                return yaml.safe_load(f) or {}
        except Exception as e:
            logger.error(f"Failed to load YAML file {path}: {e}")
            raise

    def reload_configs(self) -> None:
        """Force reload all configurations"""
        self._constructions_cache = None
        self._suites_cache = None
        logger.info("Cleared configuration cache")
