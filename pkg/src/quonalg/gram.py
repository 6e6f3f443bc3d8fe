"""Finite Gram blocks of the vacuum bilinear form.

The block of a multiset I collects the pairwise inner products of the
creator-word states of all colored arrangements of I, rows indexed by the
bra arrangement and columns by the ket arrangement, both in the canonical
enumeration order.  Two independent constructions are provided: the
``operator`` path reduces each entry with the annihilator rewriting engine,
the ``combinatorial`` path evaluates each entry as a q**cinv counting sum
over colored permutations (``cosym_expectation``).  The block
also equals the right-action matrix of the q-weighted group sum on the
arrangement module (``verify_representation`` checks all of this).

The infinite form is block diagonal over multisets; this module only ever
materializes one finite block at a time.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache

from .colored_perm import as_multiset, enumerate_arrangements
from .quon_engine import cosym_expectation, vacuum_expectation
from .group_algebra import cinv_sum, rep_matrix


@dataclass(frozen=True)
class GramBlock:
    """Square symmetric matrix of inner products over an explicit basis."""

    m: int
    multiset: tuple
    basis: tuple
    entries: tuple

    @property
    def size(self):
        return len(self.basis)


def build_gram(m, multiset, path="operator"):
    """Build the Gram block of a multiset by either construction path.

    path = "operator" uses the annihilator rewriting engine entry by entry;
    path = "combinatorial" uses the colored-permutation counting sum.  The
    two must agree exactly.
    """
    if path not in ("operator", "combinatorial"):
        raise ValueError(f"unknown path {path!r}")
    return _build_gram_cached(m, as_multiset(multiset), path)


@lru_cache(maxsize=None)
def _build_gram_cached(m, multiset, path):
    basis = enumerate_arrangements(m, multiset)
    rows = []
    for theta_bra in basis:
        if path == "operator":
            bra_word = tuple(reversed(theta_bra.tokens))
            row = tuple(
                vacuum_expectation(bra_word, theta_ket.tokens, m)
                for theta_ket in basis
            )
        else:
            row = tuple(cosym_expectation(theta_bra, theta_ket) for theta_ket in basis)
        rows.append(row)
    return GramBlock(m=m, multiset=multiset, basis=basis, entries=tuple(rows))


def verify_representation(m, multiset):
    """True iff the operator-path block equals the right-action matrix of the
    q-weighted group sum on the arrangement module."""
    multiset = as_multiset(multiset)
    block = build_gram(m, multiset, path="operator")
    rep = rep_matrix(cinv_sum(m, len(multiset)), multiset)
    return block.basis == rep.basis and block.entries == rep.entries


def gram_csv_text(block):
    """CSV form: header row of basis words, then one row of cells per row.

    Cells are canonical polynomial strings; the header cells are the basis
    arrangement words in order.
    """
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(str(b) for b in block.basis)
    for row in block.entries:
        writer.writerow(str(c) for c in row)
    return out.getvalue()


def gram_json_data(block):
    """JSON-ready dict mirroring the CSV content exactly."""
    return {
        "m": block.m,
        "multiset": list(block.multiset),
        "basis": [str(b) for b in block.basis],
        "entries": [[str(c) for c in row] for row in block.entries],
    }
