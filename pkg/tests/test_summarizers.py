"""Test the five extractive summarizers."""

import itertools
from collections import Counter

import numpy as np
import pytest

from summarax.algo.numerics import kl_divergence, normalize_counts
from summarax.config import SummarizerSettings
from summarax.core.corpus import load_sample_corpus
from summarax.errors import EmptyDocumentError, InvalidSummaryLengthError
from summarax.summarizers import (
    ALGORITHMS,
    Algorithm,
    KLSummarizer,
    LexRankSummarizer,
    LsaSummarizer,
    LuhnSummarizer,
    SentenceVector,
    TextRankSummarizer,
    create_summarizer,
    find_windows,
    idf_modified_cosine,
    luhn_sentence_score,
    overlap_similarity,
    select_top_k,
    sentence_vector,
    significant_words,
    summarize_text,
    term_sentence_matrix,
)
from summarax.summarizers.lsa import EMPTY_VOCABULARY
from summarax.utils.text import IdfTable, prepare_document

STOPS = frozenset({"the", "of", "and", "a", "is", "in"})


@pytest.fixture
def abstract():
    """A real multi-sentence abstract from the bundled corpus."""
    return load_sample_corpus().document('abstract01').text


def run(summarizer, text, k):
    return summarizer.summarize(prepare_document(text), k)


class TestSummaryShape:
    """Contract shared by every algorithm."""

    @pytest.mark.parametrize("algorithm", list(Algorithm))
    def test_selection_contract(self, algorithm, abstract):
        """min(k, n) distinct indices, original order, text is their join."""
        summarizer = create_summarizer(algorithm, stopwords=STOPS)
        sentences = prepare_document(abstract)
        n = len(sentences)
        for k in range(1, n + 2):
            summary = summarizer.summarize(sentences, k)
            assert len(summary.selected) == min(k, n)
            assert list(summary.selected) == sorted(set(summary.selected))
            assert all(0 <= i < n for i in summary.selected)
            assert summary.text == " ".join(sentences[i].raw for i in summary.selected)
            assert set(summary.scores) == set(range(n))
            assert summary.algorithm is algorithm

    @pytest.mark.parametrize("algorithm", list(Algorithm))
    def test_deterministic(self, algorithm, abstract):
        """Same input, same summary."""
        first = summarize_text(abstract, algorithm, 3, stopwords=STOPS)
        second = summarize_text(abstract, algorithm, 3, stopwords=STOPS)
        assert first == second

    @pytest.mark.parametrize("algorithm", list(Algorithm))
    def test_single_sentence(self, algorithm):
        """One sentence with k=5 returns that sentence."""
        summary = summarize_text("Alloys resist heat.", algorithm, 5, stopwords=STOPS)
        assert summary.selected == (0,)
        assert summary.text == "Alloys resist heat."

    @pytest.mark.parametrize("algorithm", list(Algorithm))
    def test_invalid_inputs(self, algorithm):
        """k < 1 and empty documents are rejected."""
        summarizer = create_summarizer(algorithm, stopwords=STOPS)
        with pytest.raises(InvalidSummaryLengthError):
            summarizer.summarize(prepare_document("Alloys resist heat."), 0)
        with pytest.raises(EmptyDocumentError):
            summarizer.summarize([], 1)

    def test_registry(self):
        """Every algorithm has a summarizer class."""
        assert set(ALGORITHMS) == set(Algorithm)
        assert isinstance(create_summarizer("luhn"), LuhnSummarizer)

    def test_select_top_k_ties(self):
        """Near-equal scores fall back to the lower index."""
        assert select_top_k([0.5, 0.5 + 1e-15, 0.1], 1) == [0]


class TestTextRank:
    """Word-overlap graph ranking."""

    def test_overlap_similarity(self):
        """Shared words over the log-length sum; short sentences score zero."""
        assert overlap_similarity(["a", "b"], ["a", "c"]) == pytest.approx(1 / (2 * np.log(2)))
        assert overlap_similarity(["a"], ["a", "b"]) == 0.0
        assert overlap_similarity(["a", "b"], ["c", "d"]) == 0.0

    def test_one_sentence_score(self):
        """A lone sentence scores 1 - d."""
        summary = run(TextRankSummarizer(STOPS), "Alloys resist heat.", 3)
        assert summary.selected == (0,)
        assert summary.scores[0] == pytest.approx(0.15)

    def test_identical_sentences(self):
        """Symmetric scores fall back to the lowest index."""
        text = "Alloys resist heat. Alloys resist heat. Alloys resist heat."
        assert run(TextRankSummarizer(STOPS), text, 1).selected == (0,)

    def test_hub_sentence_wins(self):
        """The sentence linked to both others ranks first."""
        text = "Grain alloy steel. Alloy steel copper nickel. Copper nickel phase."
        summary = run(TextRankSummarizer(STOPS), text, 1)
        assert summary.selected == (1,)
        assert summary.scores[1] > summary.scores[0]


class TestLexRank:
    """IDF-modified cosine centrality."""

    def test_cosine_example(self):
        """Hand-evaluated cosine."""
        idf = IdfTable({"alloy": 1.0, "strength": 2.0, "ductility": 2.0}, unit_count=3)
        x = sentence_vector(["alloy", "strength"], idf)
        y = sentence_vector(["alloy", "ductility"], idf)
        assert idf_modified_cosine(x, y) == pytest.approx(0.2)

    def test_cosine_bounds(self):
        """Identical vectors give 1, disjoint ones 0."""
        x = SentenceVector({"alloy": 1.5, "steel": 0.5})
        assert idf_modified_cosine(x, x) == pytest.approx(1.0)
        assert idf_modified_cosine(x, SentenceVector({"copper": 2.0})) == 0.0
        assert idf_modified_cosine(x, SentenceVector({})) == 0.0

    def test_cosine_symmetric(self):
        """cos(x, y) == cos(y, x) and stays in [0, 1]."""
        rng = np.random.default_rng(7)
        words = ["alloy", "steel", "copper", "grain", "phase"]
        for _ in range(25):
            x = SentenceVector({w: float(v) for w, v in zip(words, rng.random(5)) if v > 0.3})
            y = SentenceVector({w: float(v) for w, v in zip(words, rng.random(5)) if v > 0.3})
            assert idf_modified_cosine(x, y) == pytest.approx(idf_modified_cosine(y, x))
            assert 0.0 <= idf_modified_cosine(x, y) <= 1.0

    def test_identical_pair(self):
        """Two identical sentences tie; index 0 wins."""
        summary = run(LexRankSummarizer(STOPS), "Alloys resist heat. Alloys resist heat.", 1)
        assert summary.selected == (0,)
        assert summary.scores[0] == pytest.approx(summary.scores[1])

    def test_disjoint_sentences(self):
        """No edges: every score is 1 - d and sentence 0 wins."""
        summary = run(LexRankSummarizer(STOPS), "Alloy steel. Copper grain. Phase wear.", 1)
        assert summary.selected == (0,)
        for score in summary.scores.values():
            assert score == pytest.approx(0.15)

    @pytest.mark.parametrize("mode", ["continuous", "threshold"])
    def test_centroid_wins(self, mode):
        """The sentence sharing words with all others ranks first."""
        text = "Alloy grain. Steel phase. Alloy steel copper. Copper wear."
        summary = run(LexRankSummarizer(STOPS, mode=mode, threshold=0.1), text, 1)
        assert summary.selected == (2,)

    def test_threshold_binarizes(self):
        """Threshold mode keeps unit edges above the cut only."""
        summarizer = LexRankSummarizer(STOPS, mode="threshold", threshold=0.1)
        graph = summarizer.build_graph(prepare_document("Alloy grain. Steel phase. Alloy steel copper."))
        assert set(np.unique(graph.weights)) <= {0.0, 1.0}
        assert graph.weights[0, 2] == 1.0
        assert graph.weights[0, 1] == 0.0

    def test_invalid_mode(self):
        """Unknown modes are rejected."""
        with pytest.raises(ValueError):
            LexRankSummarizer(STOPS, mode="sparse")


class TestLuhn:
    """Significant-word clusters."""

    @pytest.mark.parametrize("tokens, expected", [
        (["s", "x", "x", "s"], 1.0),
        (["s", "s", "s"], 3.0),
        (["x", "x"], 0.0),
        (["s"] + ["x"] * 5 + ["s"], 1.0),
    ])
    def test_sentence_score(self, tokens, expected):
        """Hand-evaluated cluster scores."""
        assert luhn_sentence_score(tokens, {"s"}, gap_limit=4) == pytest.approx(expected)

    def test_gap_splits_windows(self):
        """A gap longer than the limit starts a new window."""
        windows = find_windows(["s"] + ["x"] * 5 + ["s"], {"s"}, gap_limit=4)
        assert [(w.start, w.end, w.significant_count) for w in windows] == [(0, 0, 1), (6, 6, 1)]
        windows = find_windows(["s"] + ["x"] * 4 + ["s"], {"s"}, gap_limit=4)
        assert len(windows) == 1 and windows[0].span == 6

    def test_significant_words(self):
        """Top share of the vocabulary, ties lexicographic, at least one."""
        assert significant_words([["b", "a"]], ratio=0.5) == frozenset({"a"})
        assert significant_words([["x", "y", "y"]], ratio=0.01) == frozenset({"y"})
        assert significant_words([[]]) == frozenset()

    def test_dense_cluster_beats_spread(self):
        """Two adjacent significant words beat two far-apart ones."""
        text = "Alloy bronze brass chrome zinc tin alloy. Alloy alloy."
        summary = run(LuhnSummarizer(STOPS), text, 1)
        assert summary.selected == (1,)
        assert summary.scores[1] == pytest.approx(2.0)
        assert summary.scores[0] == pytest.approx(1.0)

    def test_only_significant_sentence(self):
        """A sentence without significant words loses."""
        summary = run(LuhnSummarizer(STOPS), "Copper grain. Alloy alloy steel.", 1)
        assert summary.selected == (1,)
        assert summary.scores[0] == 0.0


class TestLsa:
    """SVD topic selection."""

    def test_term_sentence_matrix(self):
        """Rows are sorted terms, cells raw counts."""
        vocabulary, matrix = term_sentence_matrix([["steel", "alloy", "alloy"], ["steel"]])
        assert vocabulary == ["alloy", "steel"]
        np.testing.assert_array_equal(matrix, [[2.0, 0.0], [1.0, 1.0]])

    def test_dominant_direction(self):
        """diag(2, 1): the first topic picks sentence 0."""
        assert run(LsaSummarizer(STOPS), "Alloy alloy. Steel.", 1).selected == (0,)
        assert run(LsaSummarizer(STOPS), "Alloy alloy. Steel.", 2).selected == (0, 1)

    def test_identical_sentences(self):
        """Equal loadings fall back to index order."""
        assert run(LsaSummarizer(STOPS), "Alloy steel. Alloy steel.", 1).selected == (0,)

    def test_fill_after_rank_runs_out(self):
        """Rank 1 with k=2 fills from the first topic."""
        summary = run(LsaSummarizer(STOPS), "Alloy steel. Alloy steel. Alloy steel.", 2)
        assert summary.selected == (0, 1)

    def test_empty_vocabulary(self):
        """All-stopword documents keep the first k sentences with a warning."""
        summary = run(LsaSummarizer(STOPS), "The of. And the. A is.", 2)
        assert summary.selected == (0, 1)
        assert summary.warnings == (EMPTY_VOCABULARY,)


class TestKLSum:
    """Greedy KL minimization."""

    def test_single_sentence_zero_divergence(self):
        """A one-sentence document reproduces its own distribution."""
        summary = run(KLSummarizer(STOPS), "Alloy steel alloy.", 1)
        assert summary.selected == (0,)
        assert summary.scores[0] == pytest.approx(0.0, abs=1e-12)

    def test_covering_sentence_wins(self):
        """The sentence covering both words beats the repetitive one."""
        summary = run(KLSummarizer(STOPS), "Alloy alloy. Alloy steel.", 1)
        assert summary.selected == (1,)
        assert summary.scores[1] < summary.scores[0]

    def test_exhaustion(self):
        """k >= n returns every sentence."""
        summary = run(KLSummarizer(STOPS), "Alloy alloy. Alloy steel. Copper.", 5)
        assert summary.selected == (0, 1, 2)

    def test_first_pick_matches_brute_force(self):
        """The first greedy pick is the single sentence of least divergence."""
        rng = np.random.default_rng(11)
        words = ["alloy", "steel", "copper", "grain", "phase"]
        for _ in range(20):
            sentences = [list(rng.choice(words, size=rng.integers(1, 5))) for _ in range(5)]
            text = " ".join(" ".join(s).capitalize() + "." for s in sentences)
            target = normalize_counts(Counter(itertools.chain.from_iterable(sentences)))
            expected = min(
                range(len(sentences)),
                key=lambda j: (round(kl_divergence(target, normalize_counts(Counter(sentences[j]))), 12), j),
            )
            assert run(KLSummarizer(STOPS), text, 1).selected == (expected,)

    def test_empty_vocabulary(self):
        """All-stopword documents keep the first k sentences with a warning."""
        summary = run(KLSummarizer(STOPS), "The of. And the.", 1)
        assert summary.selected == (0,)
        assert summary.warnings


def test_settings_reach_summarizers():
    """Factory passes settings through."""
    settings = SummarizerSettings(lexrank_mode="threshold", lexrank_threshold=0.3, luhn_gap_limit=2)
    lexrank = create_summarizer("lexrank", settings, STOPS)
    luhn = create_summarizer("luhn", settings, STOPS)
    assert (lexrank.mode, lexrank.threshold) == ("threshold", 0.3)
    assert luhn.gap_limit == 2


VOCAB = ["alloy", "steel", "copper", "grain", "phase", "heat", "the", "of", "wear", "strength"]


def random_document(rng, max_sentences):
    """Sentences of random words; returns the text and the word lists."""
    sentences = [
        list(rng.choice(VOCAB, size=int(rng.integers(1, 8))))
        for _ in range(int(rng.integers(1, max_sentences + 1)))
    ]
    text = " ".join(" ".join(words).capitalize() + "." for words in sentences)
    return text, sentences


class TestRandomized:
    """Property suites over generated documents."""

    def test_shape_suite(self):
        """Strictly increasing indices, min(k, n) of them, text is the join."""
        rng = np.random.default_rng(5)
        summarizers = [create_summarizer(a, stopwords=STOPS) for a in Algorithm]
        for _ in range(200):
            text, _ = random_document(rng, 30)
            sentences = prepare_document(text)
            n = len(sentences)
            for summarizer in summarizers:
                for k in (1, 3, 100):
                    summary = summarizer.summarize(sentences, k)
                    assert len(summary.selected) == min(k, n)
                    assert all(a < b for a, b in zip(summary.selected, summary.selected[1:]))
                    assert summary.text == " ".join(sentences[i].raw for i in summary.selected)

    def test_klsum_greedy_steps(self):
        """Every greedy pick attains the minimum divergence of its step."""
        rng = np.random.default_rng(17)
        summarizer = KLSummarizer(STOPS)
        for _ in range(50):
            text, _ = random_document(rng, 8)
            sentences = prepare_document(text)
            content = [Counter(summarizer.content_tokens(s)) for s in sentences]
            document = sum(content, Counter())
            if not document:
                continue
            target = normalize_counts(document)
            k = int(rng.integers(1, 4))

            def divergence(counts):
                if not counts:
                    return float("inf")
                return kl_divergence(target, normalize_counts(counts))

            expected, summary_counts = [], Counter()
            for _ in range(min(k, len(sentences))):
                pick = min(
                    (j for j in range(len(sentences)) if j not in expected),
                    key=lambda j: (round(divergence(summary_counts + content[j]), 12), j),
                )
                expected.append(pick)
                summary_counts += content[pick]

            assert summarizer.summarize(sentences, k).selected == tuple(sorted(expected))

    def test_cosine_scaling_invariance(self):
        """Scaling every idf by 10 leaves the cosine unchanged."""
        rng = np.random.default_rng(23)
        words = VOCAB[:6]
        idf = IdfTable({w: float(v) for w, v in zip(words, 1.0 + rng.random(6))}, unit_count=6)
        scaled = IdfTable({w: 10.0 * v for w, v in idf.idf.items()}, unit_count=6)
        for _ in range(1000):
            a = list(rng.choice(words, size=int(rng.integers(1, 6))))
            b = list(rng.choice(words, size=int(rng.integers(1, 6))))
            x, y = sentence_vector(a, idf), sentence_vector(b, idf)
            value = idf_modified_cosine(x, y)
            assert value == pytest.approx(idf_modified_cosine(y, x), abs=1e-12)
            assert 0.0 <= value <= 1.0
            assert abs(value - idf_modified_cosine(sentence_vector(a, scaled),
                                                   sentence_vector(b, scaled))) <= 1e-12
            assert idf_modified_cosine(x, x) == pytest.approx(1.0, abs=1e-12)
