"""Test configuration loading and typed settings."""

import json

import pytest

from summarax.cli.common import apply_flags
from summarax.config import (
    DEFAULT_CONFIG, ConfigError, SummarizerSettings, load_config, pick,
)
from summarax.core.report import EvalConfig


def test_defaults_without_file():
    """No path returns a copy of the defaults."""
    cfg = load_config(None)
    assert cfg == DEFAULT_CONFIG
    cfg['rank']['damping'] = 0.5
    assert DEFAULT_CONFIG['rank']['damping'] == 0.85


def test_toml_merges_over_defaults(tmp_path):
    """User sections update defaults key by key."""
    path = tmp_path / 'config.toml'
    path.write_text('[rank]\ndamping = 0.9\n\n[luhn]\ngap_limit = 2\n', encoding='utf-8')
    cfg = load_config(str(path))
    assert cfg['rank'] == {'damping': 0.9, 'tol': 1e-8, 'max_iter': 200}
    assert cfg['luhn']['gap_limit'] == 2
    assert cfg['luhn']['significance_ratio'] == 0.1


def test_json_config(tmp_path):
    path = tmp_path / 'config.json'
    path.write_text(json.dumps({'metrics': {'rouge_n': 2}}), encoding='utf-8')
    assert load_config(str(path))['metrics']['rouge_n'] == 2


@pytest.mark.parametrize('content', ['[rank\n', 'not = toml = at all'])
def test_malformed_config(tmp_path, content):
    path = tmp_path / 'bad.toml'
    path.write_text(content, encoding='utf-8')
    with pytest.raises(ConfigError):
        load_config(str(path))


def test_missing_config(tmp_path):
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / 'missing.toml'))


def test_flag_beats_config():
    """pick prefers the flag; falls back to config."""
    cfg = {'summarize': {'k': 5}}
    assert pick(2, cfg, 'summarize', 'k') == 2
    assert pick(None, cfg, 'summarize', 'k') == 5
    assert pick(None, {}, 'summarize', 'k') == 3


def test_apply_flags_skips_none():
    cfg = load_config(None)
    merged = apply_flags(cfg, {('rank', 'damping'): 0.7, ('luhn', 'gap_limit'): None})
    assert merged['rank']['damping'] == 0.7
    assert merged['luhn']['gap_limit'] == 4
    assert cfg['rank']['damping'] == 0.85


def test_settings_from_config():
    cfg = load_config(None)
    cfg['lexrank']['mode'] = 'threshold'
    cfg['klsum']['epsilon'] = 1e-9
    settings = SummarizerSettings.from_config(cfg)
    assert settings.lexrank_mode == 'threshold'
    assert settings.kl_epsilon == 1e-9
    assert settings.rank.max_iter == 200


def test_eval_config_overrides():
    """Non-None overrides win over the config dict."""
    cfg = load_config(None)
    cfg['metrics']['bleu_max_n'] = 2
    config = EvalConfig.from_config(cfg, k=1, rouge_n=None)
    assert (config.k, config.rouge_n, config.bleu_max_n) == (1, 1, 2)


@pytest.mark.parametrize('section, key, value', [
    ('lexrank', 'mode', 'bogus'),
    ('lexrank', 'threshold', 1.5),
    ('luhn', 'significance_ratio', 0),
    ('luhn', 'gap_limit', -1),
    ('klsum', 'epsilon', 0.0),
    ('rank', 'damping', 1.0),
    ('rank', 'tol', 0.0),
])
def test_settings_reject_bad_values(section, key, value):
    """Out-of-range summarizer values fail when the settings are built."""
    cfg = load_config(None)
    cfg[section][key] = value
    with pytest.raises(ValueError):
        SummarizerSettings.from_config(cfg)
