"""
SQLAlchemy models and init.
The catalog index lives next to the .alg files; suites replay from here, never from enumeration.
"""

from contextlib import contextmanager
from datetime import datetime
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Union

from sqlalchemy import Boolean, Column, DateTime, Integer, String, UniqueConstraint, create_engine
from sqlalchemy.orm import DeclarativeBase, Session, sessionmaker

from config import CATALOG_DB_NAME


class Base(DeclarativeBase):
    pass


class CatalogRecord(Base):
    """One isomorphism type. Flags and counts are reproducible from the .alg file alone."""

    __tablename__ = "catalog_records"
    __table_args__ = (UniqueConstraint("size", "canonical_hash", name="uq_catalog_size_hash"),)

    id = Column(Integer, primary_key=True, autoincrement=True)
    name = Column(String(64), nullable=False, index=True)
    size = Column(Integer, nullable=False, index=True)
    canonical_hash = Column(String(40), nullable=False)
    path = Column(String(255), nullable=False)  # relative to the catalog directory
    integral = Column(Boolean, nullable=False)
    crl = Column(Boolean, nullable=False)
    sr_lattice = Column(Boolean, nullable=False)
    chain = Column(Boolean, nullable=False)
    c1 = Column(Boolean, nullable=False)
    c2 = Column(Boolean, nullable=False)
    e1 = Column(Boolean, nullable=False)
    e2 = Column(Boolean, nullable=False)
    n_con = Column(Integer, nullable=False)
    n_scs = Column(Integer, nullable=False)
    created_at = Column(DateTime, default=datetime.utcnow)


def database_url(catalog_dir: Union[str, Path]) -> str:
    return f"sqlite:///{Path(catalog_dir).resolve() / CATALOG_DB_NAME}"


@lru_cache(maxsize=None)
def _session_factory(url: str) -> sessionmaker:
    engine = create_engine(url)
    Base.metadata.create_all(bind=engine)
    return sessionmaker(autocommit=False, autoflush=False, bind=engine)


def init_db(catalog_dir: Union[str, Path]) -> None:
    """Create tables (idempotent)."""
    Path(catalog_dir).mkdir(parents=True, exist_ok=True)
    _session_factory(database_url(catalog_dir))


@contextmanager
def get_db(catalog_dir: Union[str, Path]) -> Iterator[Session]:
    """Session for one catalog directory; closed when the generator finishes."""
    init_db(catalog_dir)
    db = _session_factory(database_url(catalog_dir))()
    try:
        yield db
    finally:
        db.close()


def has_index(catalog_dir: Union[str, Path]) -> bool:
    return (Path(catalog_dir) / CATALOG_DB_NAME).is_file()
