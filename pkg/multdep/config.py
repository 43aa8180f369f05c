"""Configuration settings for the multiplicative dependence toolkit."""

import os

from dotenv import load_dotenv

from .errors import ConfigError

# Load environment variables from .env file
load_dotenv()


def _env_int(name: str, default: int) -> int:
    """Read a positive integer from the environment."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw.replace('_', ''))
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


class Config:
    """Configuration class for searches, catalogs and bound chains."""

    def __init__(self, sieve_limit=None, max_workers=None, classify_cap=8,
                 pillai_bound=10**9, catalog_sample=1000, catalog_seed=2022,
                 precision_dps=60, log_level=None):
        """
        Initialize configuration.

        Args:
            sieve_limit: Largest integer covered by the smallest-prime-factor sieve.
                         Defaults to MULTDEP_SIEVE_LIMIT or 10**7.
            max_workers: Worker processes for range searches.
                         Defaults to MULTDEP_JOBS or 1.
            classify_cap: Longest tuple accepted by subtuple classification.
            pillai_bound: Default bound B on the powers in Pillai scans.
            catalog_sample: Number of non-exceptional (d, c, t) sampled by the catalog check.
            catalog_seed: Seed of that sample, so reports are reproducible.
            precision_dps: mpmath decimal digits used by the bound chain.
            log_level: Logging level name. Defaults to MULTDEP_LOG_LEVEL or INFO.
        """
        if sieve_limit is None:
            sieve_limit = _env_int('MULTDEP_SIEVE_LIMIT', 10_000_000)
        if max_workers is None:
            max_workers = _env_int('MULTDEP_JOBS', 1)
        if log_level is None:
            log_level = os.getenv('MULTDEP_LOG_LEVEL', 'INFO').upper()

        if sieve_limit < 2:
            raise ConfigError(f"sieve_limit must be at least 2, got {sieve_limit}")
        if max_workers < 1:
            raise ConfigError(f"max_workers must be positive, got {max_workers}")
        if classify_cap < 1:
            raise ConfigError(f"classify_cap must be positive, got {classify_cap}")
        if precision_dps < 16:
            raise ConfigError("precision_dps below 16 digits loses the 52-bit guarantee")

        self.sieve_limit = sieve_limit
        self.max_workers = max_workers
        self.classify_cap = classify_cap

        # Pillai settings
        self.pillai_bound = pillai_bound
        self.catalog_sample = catalog_sample
        self.catalog_seed = catalog_seed

        # Bound chain settings
        self.precision_dps = precision_dps

        self.log_level = log_level


_default_config = None


def get_config() -> Config:
    """Return the process-wide default configuration, built on first use."""
    global _default_config
    if _default_config is None:
        _default_config = Config()
    return _default_config


def set_config(config: Config) -> None:
    """Replace the process-wide default configuration."""
    global _default_config
    _default_config = config
