"""Directory-backed corpus store: one JSON file per document plus a manifest.

Writes go through a temp-file-then-rename swap, and manifest mutations
serialize on a file lock, so a reader never observes a half-written
document and a CLI invocation can safely share the directory with a
running service.
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Callable

from filelock import FileLock

from .model import AnnotatedDocument, DocumentMetadata

MANIFEST_VERSION = 1


class NotFound(KeyError):
    pass


def _write_atomic(path: Path, payload: str) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(payload, encoding="utf-8")
    os.replace(tmp, path)


def _dump(data: dict) -> str:
    return json.dumps(data, ensure_ascii=False, indent=1)


class CorpusStore:
    """Desk-scale persistent corpus with an embedded facet cache.

    ``on_change(doc_id, doc_or_none)`` is invoked after every ingest and
    remove; the indexing layer hooks facet recomputation there.
    """

    def __init__(self, root: str | Path, on_change: Callable | None = None):
        self.root = Path(root)
        self.docs_dir = self.root / "docs"
        self.pending_dir = self.root / "pending"
        self.wordlists_dir = self.root / "wordlists"
        for d in (self.root, self.docs_dir, self.pending_dir, self.wordlists_dir):
            d.mkdir(parents=True, exist_ok=True)
        self._manifest_path = self.root / "manifest.json"
        self._lock = FileLock(str(self.root / ".manifest.lock"))
        self.on_change = on_change
        if not self._manifest_path.exists():
            with self._lock:
                if not self._manifest_path.exists():
                    _write_atomic(
                        self._manifest_path,
                        _dump({"v": MANIFEST_VERSION, "next": 1, "docs": {}}),
                    )

    # -- manifest ---------------------------------------------------------

    def _read_manifest(self) -> dict:
        return json.loads(self._manifest_path.read_text("utf-8"))

    def _write_manifest(self, manifest: dict) -> None:
        _write_atomic(self._manifest_path, _dump(manifest))

    def manifest_entry(self, doc_id: str) -> dict:
        entry = self._read_manifest()["docs"].get(doc_id)
        if entry is None:
            raise NotFound(doc_id)
        return entry

    # -- documents --------------------------------------------------------

    def ingest(self, doc: AnnotatedDocument) -> str:
        with self._lock:
            manifest = self._read_manifest()
            doc_id = doc.id
            if not doc_id:
                doc_id = f"d{manifest['next']:04d}"
                manifest["next"] += 1
                doc = doc.with_id(doc_id)
            elif doc_id in manifest["docs"]:
                raise ValueError(f"document id {doc_id!r} already stored")
            filename = f"{doc_id}.json"
            _write_atomic(self.docs_dir / filename, _dump(doc.to_dict()))
            manifest["docs"][doc_id] = {
                "file": filename,
                "metadata": doc.metadata.to_dict(),
                "line_count": doc.line_count,
                "word_count": doc.word_count,
                "facets": {},
            }
            self._write_manifest(manifest)
        if self.on_change:
            self.on_change(doc_id, doc)
        return doc_id

    def get(self, doc_id: str) -> AnnotatedDocument:
        entry = self.manifest_entry(doc_id)
        return AnnotatedDocument.from_dict(
            json.loads((self.docs_dir / entry["file"]).read_text("utf-8"))
        )

    def list_ids(self, metadata_filter: dict[str, str] | None = None) -> list[str]:
        manifest = self._read_manifest()
        out = []
        for doc_id, entry in sorted(manifest["docs"].items()):
            md = entry["metadata"]
            if metadata_filter and any(md.get(k) != v for k, v in metadata_filter.items()):
                continue
            out.append(doc_id)
        return out

    def remove(self, doc_id: str) -> None:
        with self._lock:
            manifest = self._read_manifest()
            entry = manifest["docs"].pop(doc_id, None)
            if entry is None:
                raise NotFound(doc_id)
            self._write_manifest(manifest)
            try:
                (self.docs_dir / entry["file"]).unlink()
            except FileNotFoundError:
                pass
        if self.on_change:
            self.on_change(doc_id, None)

    # -- facet cache ------------------------------------------------------

    def set_facets(self, doc_id: str, facets: dict) -> None:
        with self._lock:
            manifest = self._read_manifest()
            if doc_id not in manifest["docs"]:
                raise NotFound(doc_id)
            manifest["docs"][doc_id]["facets"] = facets
            self._write_manifest(manifest)

    def get_facets(self, doc_id: str) -> dict:
        return self.manifest_entry(doc_id).get("facets", {})

    # -- pending annotations ----------------------------------------------

    def save_pending(self, text: str, metadata: DocumentMetadata, unanalyzable: list[str]) -> str:
        with self._lock:
            manifest = self._read_manifest()
            pending_id = f"p{manifest['next']:04d}"
            manifest["next"] += 1
            self._write_manifest(manifest)
        _write_atomic(
            self.pending_dir / f"{pending_id}.json",
            _dump(
                {
                    "id": pending_id,
                    "text": text,
                    "metadata": metadata.to_dict(),
                    "unanalyzable": unanalyzable,
                }
            ),
        )
        return pending_id

    def get_pending(self, pending_id: str) -> dict:
        path = self.pending_dir / f"{pending_id}.json"
        if not path.exists():
            raise NotFound(pending_id)
        return json.loads(path.read_text("utf-8"))

    def list_pending(self) -> list[dict]:
        return [
            json.loads(p.read_text("utf-8"))
            for p in sorted(self.pending_dir.glob("p*.json"))
        ]

    def remove_pending(self, pending_id: str) -> None:
        path = self.pending_dir / f"{pending_id}.json"
        if not path.exists():
            raise NotFound(pending_id)
        path.unlink()

    # -- level word-lists ---------------------------------------------------

    def wordlist(self, level: str) -> frozenset[str] | None:
        path = self.wordlists_dir / f"{level}.txt"
        if not path.exists():
            return None
        return frozenset(
            line.strip() for line in path.read_text("utf-8").splitlines() if line.strip()
        )

    def write_wordlist(self, level: str, skeletons) -> None:
        _write_atomic(self.wordlists_dir / f"{level}.txt", "\n".join(skeletons) + "\n")
