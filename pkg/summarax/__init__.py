"""summarax - extractive text summarization with BLEU/ROUGE evaluation."""

# Version is managed in pyproject.toml
try:
    from importlib.metadata import version
    __version__ = version("summarax")
except Exception:
    __version__ = "unknown"
