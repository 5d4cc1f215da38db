"""Corpus of documents paired with reference summaries.

Directory layout::

    <root>/docs/<id>.txt
    <root>/refs/<id>.txt   (optional)

Pairing is by filename stem.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Mapping, Optional

from ..errors import (
    CorpusEncodingError, EmptyCorpusError, InvalidDocumentError,
    MissingDocsDirError, UnpairedDocumentsError,
)

logger = logging.getLogger(__name__)

SAMPLE_CORPUS = Path(__file__).parent.parent / 'data' / 'sample_corpus'


def validate_document_id(doc_id: str) -> str:
    """Check a document id: non-empty, no path separators."""
    if not doc_id or '/' in doc_id or '\\' in doc_id:
        raise InvalidDocumentError(f"Invalid document id: {doc_id!r}")
    return doc_id


@dataclass(frozen=True)
class Document:
    """A source text addressable by id."""
    id: str
    text: str

    def __post_init__(self):
        validate_document_id(self.id)
        if not self.text.strip():
            raise InvalidDocumentError(f"Document '{self.id}' is empty")


@dataclass(frozen=True)
class Corpus:
    """Documents sorted by id plus reference summaries keyed by id."""
    documents: tuple[Document, ...]
    references: Mapping[str, str] = field(default_factory=dict)
    dangling_references: tuple[str, ...] = ()
    root: Optional[str] = None

    def __post_init__(self):
        if not self.documents:
            raise EmptyCorpusError("Corpus has no documents")
        ids = [d.id for d in self.documents]
        if len(set(ids)) != len(ids):
            raise InvalidDocumentError("Duplicate document ids in corpus")
        if ids != sorted(ids):
            object.__setattr__(self, 'documents', tuple(sorted(self.documents, key=lambda d: d.id)))

    @property
    def ids(self) -> list[str]:
        return [d.id for d in self.documents]

    def document(self, doc_id: str) -> Document:
        for doc in self.documents:
            if doc.id == doc_id:
                return doc
        raise KeyError(doc_id)

    def reference(self, doc_id: str) -> str:
        return self.references[doc_id]

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self) -> Iterator[Document]:
        return iter(self.documents)


def read_text(path: Path) -> str:
    """Read a UTF-8 text file; drop a BOM and normalize line endings to ``\\n``."""
    data = path.read_bytes()
    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as e:
        raise CorpusEncodingError(str(path), str(e)) from e
    if text.startswith('\ufeff'):
        text = text[1:]
    return text.replace('\r\n', '\n').replace('\r', '\n')


def _text_files(directory: Path) -> list[Path]:
    return sorted((p for p in directory.iterdir() if p.is_file() and p.suffix == '.txt'),
                  key=lambda p: p.stem)


def load_corpus(root_path: str | Path) -> Corpus:
    """Load ``docs/`` and optional ``refs/`` under ``root_path``.

    Reference files without a matching document are logged and recorded in
    ``Corpus.dangling_references``; they are not fatal.
    """
    root = Path(root_path)
    docs_dir = root / 'docs'
    if not docs_dir.is_dir():
        raise MissingDocsDirError(f"No docs/ directory under {root}")

    documents = []
    for path in _text_files(docs_dir):
        text = read_text(path)
        if not text.strip():
            raise InvalidDocumentError(f"Document file is empty: {path}")
        documents.append(Document(id=path.stem, text=text))
    if not documents:
        raise EmptyCorpusError(f"No .txt documents in {docs_dir}")

    doc_ids = {d.id for d in documents}
    references: dict[str, str] = {}
    dangling: list[str] = []
    refs_dir = root / 'refs'
    if refs_dir.is_dir():
        for path in _text_files(refs_dir):
            if path.stem not in doc_ids:
                logger.warning(f"Dangling reference without document: {path.name}")
                dangling.append(path.stem)
                continue
            text = read_text(path)
            if not text.strip():
                raise InvalidDocumentError(f"Reference file is empty: {path}")
            references[path.stem] = text

    logger.info(f"Loaded corpus {root}: {len(documents)} docs, {len(references)} refs")
    return Corpus(
        documents=tuple(documents),
        references=references,
        dangling_references=tuple(dangling),
        root=str(root),
    )


def load_sample_corpus() -> Corpus:
    """The bundled 20-abstract sample corpus."""
    return load_corpus(SAMPLE_CORPUS)


def require_paired(corpus: Corpus) -> Corpus:
    """Return ``corpus`` unchanged when every document has a reference."""
    missing = [doc_id for doc_id in corpus.ids if doc_id not in corpus.references]
    if missing:
        raise UnpairedDocumentsError(missing)
    return corpus
