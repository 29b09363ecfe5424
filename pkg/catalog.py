"""
Catalog store: enumerated algebras on disk plus a summary index.

Layout under the catalog directory:
    n<k>/<hash>.alg   one algebra file per isomorphism type
    index.tsv         the summary index
    catalog.db        the same index as CatalogRecord rows (read first on replay)
"""

import csv
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Union

from algebra_file import load_algebra, save_algebra
from canonical import CanonicalForm, canonicalize
from config import CATALOG_INDEX_NAME
from congruences import all_congruences, all_strongly_convex
from database import CatalogRecord, get_db, has_index, init_db
from errors import AlgebraFileError
from identities import CHAIN_IDENTITIES, satisfies
from lattice import is_chain
from srl_monoid import Classification, SrlMonoid, classify

log = logging.getLogger(__name__)

VERDICT_TAGS = ("C1", "C2", "E1", "E2")
INDEX_COLUMNS = (
    "name", "size", "integral", "crl", "sr_lattice", "chain",
    "C1", "C2", "E1", "E2", "n_con", "n_scs", "hash",
)


@dataclass
class CatalogEntry:
    algebra: SrlMonoid
    canonical_hash: str
    classification: Classification
    chain: bool
    verdicts: Dict[str, bool]
    n_con: int
    n_scs: int
    path: Optional[str] = field(default=None, compare=False)

    @property
    def name(self) -> str:
        return self.algebra.name

    @property
    def size(self) -> int:
        return self.algebra.n

    @property
    def relative_path(self) -> str:
        return f"n{self.size}/{self.canonical_hash}.alg"

    def index_row(self) -> Dict[str, str]:
        flags = self.classification
        row = {
            "name": self.name,
            "size": str(self.size),
            "integral": str(flags.integral),
            "crl": str(flags.crl),
            "sr_lattice": str(flags.sr_lattice),
            "chain": str(self.chain),
            "n_con": str(self.n_con),
            "n_scs": str(self.n_scs),
            "hash": self.canonical_hash,
        }
        row.update({tag: str(self.verdicts[tag]) for tag in VERDICT_TAGS})
        return row

    def summary(self) -> tuple:
        """Everything reproducible from the algebra alone."""
        return (self.classification, self.chain, tuple(sorted(self.verdicts.items())), self.n_con, self.n_scs)


def build_entry(s: SrlMonoid, form: Optional[CanonicalForm] = None) -> CatalogEntry:
    form = canonicalize(s) if form is None else form
    return CatalogEntry(
        algebra=s,
        canonical_hash=form.digest,
        classification=classify(s),
        chain=is_chain(s.lattice),
        verdicts={tag: satisfies(s, CHAIN_IDENTITIES[tag]) for tag in VERDICT_TAGS},
        n_con=len(all_congruences(s)),
        n_scs=len(all_strongly_convex(s)),
    )


def write_catalog(entries: List[CatalogEntry], catalog_dir: Union[str, Path]) -> Path:
    """Write .alg files, index.tsv and DB rows. Existing DB rows are replaced."""
    root = Path(catalog_dir)
    root.mkdir(parents=True, exist_ok=True)
    for entry in entries:
        save_algebra(entry.algebra, root / entry.relative_path)
        entry.path = entry.relative_path

    index_path = root / CATALOG_INDEX_NAME
    with index_path.open("w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=INDEX_COLUMNS, delimiter="\t", lineterminator="\n")
        writer.writeheader()
        for entry in entries:
            writer.writerow(entry.index_row())

    init_db(root)
    with get_db(root) as db:
        try:
            db.query(CatalogRecord).delete()
            for entry in entries:
                flags = entry.classification
                db.add(
                    CatalogRecord(
                        name=entry.name,
                        size=entry.size,
                        canonical_hash=entry.canonical_hash,
                        path=entry.relative_path,
                        integral=flags.integral,
                        crl=flags.crl,
                        sr_lattice=flags.sr_lattice,
                        chain=entry.chain,
                        c1=entry.verdicts["C1"],
                        c2=entry.verdicts["C2"],
                        e1=entry.verdicts["E1"],
                        e2=entry.verdicts["E2"],
                        n_con=entry.n_con,
                        n_scs=entry.n_scs,
                    )
                )
            db.commit()
        except Exception:
            db.rollback()
            raise
    log.info(f"catalog_written dir={root} count={len(entries)}")
    return index_path


def _as_bool(value: str) -> bool:
    return str(value).strip().lower() in ("true", "1", "yes")


def _entry_from(root: Path, row: Dict[str, str]) -> CatalogEntry:
    size = int(row["size"])
    rel = f"n{size}/{row['hash']}.alg"
    algebra = load_algebra(root / rel)
    if not isinstance(algebra, SrlMonoid):
        raise AlgebraFileError("catalog file has neither arrow nor Q", field="arrow")
    classification = Classification(
        integral=_as_bool(row["integral"]),
        crl=_as_bool(row["crl"]),
        sr_lattice=_as_bool(row["sr_lattice"]),
        bounded=size >= 1,
    )
    return CatalogEntry(
        algebra=algebra,
        canonical_hash=row["hash"],
        classification=classification,
        chain=_as_bool(row["chain"]),
        verdicts={tag: _as_bool(row[tag]) for tag in VERDICT_TAGS},
        n_con=int(row["n_con"]),
        n_scs=int(row["n_scs"]),
        path=rel,
    )


def _rows_from_db(root: Path, max_size: Optional[int]) -> List[Dict[str, str]]:
    with get_db(root) as db:
        query = db.query(CatalogRecord)
        if max_size is not None:
            query = query.filter(CatalogRecord.size <= max_size)
        return [
            {
                "name": r.name,
                "size": str(r.size),
                "hash": r.canonical_hash,
                "integral": str(r.integral),
                "crl": str(r.crl),
                "sr_lattice": str(r.sr_lattice),
                "chain": str(r.chain),
                "C1": str(r.c1),
                "C2": str(r.c2),
                "E1": str(r.e1),
                "E2": str(r.e2),
                "n_con": str(r.n_con),
                "n_scs": str(r.n_scs),
            }
            for r in query.order_by(CatalogRecord.size, CatalogRecord.id).all()
        ]


def _rows_from_tsv(root: Path, max_size: Optional[int]) -> List[Dict[str, str]]:
    index_path = root / CATALOG_INDEX_NAME
    if not index_path.is_file():
        raise AlgebraFileError(f"no catalog index in {root}", field=CATALOG_INDEX_NAME)
    with index_path.open(encoding="utf-8", newline="") as f:
        rows = list(csv.DictReader(f, delimiter="\t"))
    missing = [c for c in INDEX_COLUMNS if rows and c not in rows[0]]
    if missing:
        raise AlgebraFileError(f"index is missing columns {missing}", field=CATALOG_INDEX_NAME, line=1)
    return [r for r in rows if max_size is None or int(r["size"]) <= max_size]


def load_catalog(catalog_dir: Union[str, Path], max_size: Optional[int] = None) -> List[CatalogEntry]:
    """Entries up to max_size, from the DB index when present, else index.tsv."""
    root = Path(catalog_dir)
    if has_index(root):
        rows, source = _rows_from_db(root, max_size), "db"
    else:
        rows, source = _rows_from_tsv(root, max_size), "tsv"
    entries = [_entry_from(root, row) for row in rows]
    log.info(f"catalog_loaded dir={root} source={source} count={len(entries)}")
    return entries
