"""Test corpus loading and validation."""

import pytest

from summarax.core.corpus import (
    Corpus, Document, load_corpus, load_sample_corpus, read_text, require_paired,
)
from summarax.errors import (
    CorpusEncodingError, EmptyCorpusError, InvalidDocumentError,
    MissingDocsDirError, UnpairedDocumentsError,
)


def make_corpus(root, docs, refs=None):
    """Write docs/ and refs/ text files under ``root``."""
    (root / 'docs').mkdir(parents=True, exist_ok=True)
    for doc_id, text in docs.items():
        (root / 'docs' / f'{doc_id}.txt').write_text(text, encoding='utf-8')
    if refs is not None:
        (root / 'refs').mkdir(exist_ok=True)
        for doc_id, text in refs.items():
            (root / 'refs' / f'{doc_id}.txt').write_text(text, encoding='utf-8')
    return root


class TestLoadCorpus:
    """Loading a corpus directory."""

    def test_pairs_by_stem(self, tmp_path):
        """Documents and references pair up by filename."""
        root = make_corpus(tmp_path, {'b': 'Beta text.', 'a': 'Alpha text.'},
                           {'a': 'Alpha.', 'b': 'Beta.'})
        corpus = load_corpus(root)
        assert corpus.ids == ['a', 'b']
        assert corpus.reference('b') == 'Beta.'
        assert len(corpus) == 2

    def test_missing_docs_dir(self, tmp_path):
        """A root without docs/ is rejected."""
        with pytest.raises(MissingDocsDirError):
            load_corpus(tmp_path)

    def test_empty_docs_dir(self, tmp_path):
        """docs/ without .txt files is an empty corpus."""
        (tmp_path / 'docs').mkdir()
        (tmp_path / 'docs' / 'notes.md').write_text('ignored', encoding='utf-8')
        with pytest.raises(EmptyCorpusError):
            load_corpus(tmp_path)

    def test_empty_document(self, tmp_path):
        """A whitespace-only document violates the Document invariant."""
        root = make_corpus(tmp_path, {'a': '  \n '})
        with pytest.raises(InvalidDocumentError):
            load_corpus(root)

    def test_invalid_utf8(self, tmp_path):
        """Bad bytes name the offending file."""
        (tmp_path / 'docs').mkdir()
        bad = tmp_path / 'docs' / 'bad.txt'
        bad.write_bytes(b'caf\xe9 alloy')
        with pytest.raises(CorpusEncodingError) as excinfo:
            load_corpus(tmp_path)
        assert 'bad.txt' in excinfo.value.filename

    def test_dangling_reference_is_not_fatal(self, tmp_path):
        """A reference without a document is recorded, not raised."""
        root = make_corpus(tmp_path, {'a': 'Alpha text.'}, {'a': 'Alpha.', 'zz': 'Orphan.'})
        corpus = load_corpus(root)
        assert corpus.dangling_references == ('zz',)
        assert 'zz' not in corpus.references

    def test_empty_reference(self, tmp_path):
        """A whitespace-only reference is rejected at load time, naming the file."""
        root = make_corpus(tmp_path, {'a': 'Alpha text.', 'b': 'Beta text.'}, {'a': 'Alpha.', 'b': ' \n'})
        with pytest.raises(InvalidDocumentError) as excinfo:
            load_corpus(root)
        assert 'b.txt' in str(excinfo.value)

    def test_bom_and_line_endings(self, tmp_path):
        """A BOM is dropped and CRLF becomes LF."""
        path = tmp_path / 'x.txt'
        path.write_bytes('\ufeffOne.\r\nTwo.\rThree.'.encode('utf-8'))
        assert read_text(path) == 'One.\nTwo.\nThree.'


class TestPairing:
    """Reference pairing checks."""

    def test_unpaired_ids_listed(self, tmp_path):
        """Missing references are reported by id, sorted."""
        root = make_corpus(tmp_path, {'c': 'C.', 'a': 'A.', 'b': 'B.'}, {'b': 'B.'})
        with pytest.raises(UnpairedDocumentsError) as excinfo:
            require_paired(load_corpus(root))
        assert excinfo.value.ids == ['a', 'c']

    def test_fully_paired_passes(self, tmp_path):
        """A paired corpus comes back unchanged."""
        root = make_corpus(tmp_path, {'a': 'A.'}, {'a': 'A.'})
        corpus = load_corpus(root)
        assert require_paired(corpus) is corpus


class TestDocument:
    """Document and Corpus invariants."""

    def test_bad_id(self):
        """Ids may not contain path separators."""
        with pytest.raises(InvalidDocumentError):
            Document(id='a/b', text='Text.')

    def test_duplicate_ids(self):
        """Duplicate ids are rejected."""
        with pytest.raises(InvalidDocumentError):
            Corpus(documents=(Document('a', 'X.'), Document('a', 'Y.')))

    def test_sorted_by_id(self):
        """Documents are kept sorted by id."""
        corpus = Corpus(documents=(Document('b', 'X.'), Document('a', 'Y.')))
        assert corpus.ids == ['a', 'b']

    def test_empty_corpus(self):
        """A corpus needs at least one document."""
        with pytest.raises(EmptyCorpusError):
            Corpus(documents=())


def test_sample_corpus():
    """The bundled sample has 20 paired abstracts."""
    corpus = require_paired(load_sample_corpus())
    assert len(corpus) == 20
    assert corpus.ids[0] == 'abstract01'
    assert all(corpus.reference(doc_id).strip() for doc_id in corpus.ids)
