"""Configuration loading and typed settings."""

import copy
import json
import logging
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

logger = logging.getLogger(__name__)

ALGORITHM_NAMES = ('textrank', 'lexrank', 'luhn', 'lsa', 'klsum')
LEXRANK_MODES = ('continuous', 'threshold')

# Default configuration
DEFAULT_CONFIG: dict[str, dict[str, Any]] = {
    'summarize': {
        'algorithm': 'textrank',
        'k': 3,
    },
    'rank': {
        'damping': 0.85,
        'tol': 1e-8,
        'max_iter': 200,
    },
    'lexrank': {
        'mode': 'continuous',  # continuous (cosine weights) or threshold
        'threshold': 0.1,
    },
    'luhn': {
        'significance_ratio': 0.1,
        'gap_limit': 4,
    },
    'klsum': {'epsilon': 1e-12},
    'metrics': {
        'rouge_n': 1,
        'bleu_max_n': 4,
        'bleu_reference': 'reference',  # reference or source
        'smoothing_epsilon': None,
    },
    'evaluate': {
        'algorithms': list(ALGORITHM_NAMES),
        'workers': 1,
    },
    'text': {
        'stopwords': None,
        'drop_single_char': False,
    },
}


class ConfigError(ValueError):
    """Config file missing, unreadable, or malformed."""


def load_config(config_path: Optional[str]) -> dict[str, Any]:
    """Load configuration from a TOML or JSON file, merged over the defaults."""
    merged = copy.deepcopy(DEFAULT_CONFIG)
    if config_path is None:
        return merged

    path = Path(config_path)
    try:
        if path.suffix.lower() == '.json':
            with open(path, 'r', encoding='utf-8') as f:
                config = json.load(f)
        else:
            with open(path, 'rb') as f:
                config = tomllib.load(f)
        logger.info(f"Loaded config: {config_path}")
    except FileNotFoundError:
        logger.error(f"Config not found: {config_path}")
        raise ConfigError(f"Config not found: {config_path}")
    except (OSError, tomllib.TOMLDecodeError, json.JSONDecodeError) as e:
        logger.error(f"Failed to load config: {e}")
        raise ConfigError(f"Failed to load config: {e}")

    if not isinstance(config, dict):
        raise ConfigError(f"Config root must be a table/object: {config_path}")

    for section, values in config.items():
        if section in merged and isinstance(values, dict):
            merged[section].update(values)
        else:
            merged[section] = values
    return merged


def pick(flag: Any, cfg: dict[str, Any], section: str, key: str) -> Any:
    """Return the CLI flag value when given, otherwise the config value."""
    if flag is not None:
        return flag
    return cfg.get(section, {}).get(key, DEFAULT_CONFIG.get(section, {}).get(key))


@dataclass(frozen=True)
class RankSettings:
    """Damped fixed-point iteration parameters (PageRank family)."""
    damping: float = 0.85
    tol: float = 1e-8
    max_iter: int = 200

    def __post_init__(self):
        if not 0.0 < self.damping < 1.0:
            raise ValueError(f"damping must be in (0, 1), got {self.damping}")
        if self.tol <= 0:
            raise ValueError(f"tol must be > 0, got {self.tol}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")


@dataclass(frozen=True)
class SummarizerSettings:
    """Knobs shared by the summarizer factory; validated on construction."""
    rank: RankSettings = field(default_factory=RankSettings)
    lexrank_mode: str = 'continuous'
    lexrank_threshold: float = 0.1
    luhn_significance_ratio: float = 0.1
    luhn_gap_limit: int = 4
    kl_epsilon: float = 1e-12

    def __post_init__(self):
        if self.lexrank_mode not in LEXRANK_MODES:
            raise ValueError(f"LexRank mode must be one of {LEXRANK_MODES}, got {self.lexrank_mode!r}")
        if not 0.0 <= self.lexrank_threshold <= 1.0:
            raise ValueError(f"LexRank threshold must be in [0, 1], got {self.lexrank_threshold}")
        if not 0.0 < self.luhn_significance_ratio <= 1.0:
            raise ValueError(
                f"significance_ratio must be in (0, 1], got {self.luhn_significance_ratio}"
            )
        if self.luhn_gap_limit < 0:
            raise ValueError(f"gap_limit must be >= 0, got {self.luhn_gap_limit}")
        if self.kl_epsilon <= 0:
            raise ValueError(f"epsilon must be > 0, got {self.kl_epsilon}")

    @classmethod
    def from_config(cls, cfg: dict[str, Any]) -> 'SummarizerSettings':
        rank_cfg = cfg.get('rank', {})
        return cls(
            rank=RankSettings(
                damping=float(rank_cfg.get('damping', 0.85)),
                tol=float(rank_cfg.get('tol', 1e-8)),
                max_iter=int(rank_cfg.get('max_iter', 200)),
            ),
            lexrank_mode=str(cfg.get('lexrank', {}).get('mode', 'continuous')),
            lexrank_threshold=float(cfg.get('lexrank', {}).get('threshold', 0.1)),
            luhn_significance_ratio=float(cfg.get('luhn', {}).get('significance_ratio', 0.1)),
            luhn_gap_limit=int(cfg.get('luhn', {}).get('gap_limit', 4)),
            kl_epsilon=float(cfg.get('klsum', {}).get('epsilon', 1e-12)),
        )

    def as_dict(self) -> dict[str, Any]:
        return {
            'damping': self.rank.damping,
            'tol': self.rank.tol,
            'max_iter': self.rank.max_iter,
            'lexrank_mode': self.lexrank_mode,
            'lexrank_threshold': self.lexrank_threshold,
            'luhn_significance_ratio': self.luhn_significance_ratio,
            'luhn_gap_limit': self.luhn_gap_limit,
            'kl_epsilon': self.kl_epsilon,
        }
