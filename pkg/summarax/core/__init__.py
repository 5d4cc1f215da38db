from .corpus import (
    Corpus, Document, load_corpus, load_sample_corpus, require_paired, SAMPLE_CORPUS,
)
from .metrics import (
    BleuBreakdown, RougeScore, modified_ngram_precision, geometric_average_precision,
    brevity_penalty, bleu_score, individual_bleu, rouge_n, f1_from,
)
from .report import (
    EvalConfig, EvalReport, AlgorithmAggregate, DocumentScore,
    evaluate_corpus, emit_report, format_ranking_table, rank_algorithms,
)

__all__ = [
    'Corpus', 'Document', 'load_corpus', 'load_sample_corpus', 'require_paired', 'SAMPLE_CORPUS',
    'BleuBreakdown', 'RougeScore', 'modified_ngram_precision', 'geometric_average_precision',
    'brevity_penalty', 'bleu_score', 'individual_bleu', 'rouge_n', 'f1_from',
    'EvalConfig', 'EvalReport', 'AlgorithmAggregate', 'DocumentScore',
    'evaluate_corpus', 'emit_report', 'format_ranking_table', 'rank_algorithms',
]
