"""Joint float/exact analysis of a single graph.

This is where the two independent routes meet: the Jacobi spectrum with its
projection-based main flags, and the exact integer walk-matrix rank.  The
float route classifies on its own whenever it is confident; gray-zone
instances are resolved by trusting the exact count.  A confident float count
that still contradicts the exact rank is a hard error, never papered over.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import exact, spectra
from .graphs import Graph


class RouteDisagreementError(RuntimeError):
    """Confident float classification contradicts the exact walk-matrix rank."""

    def __init__(self, s_float: int, rank: int):
        super().__init__(
            f"float route counted {s_float} main group(s) but the exact "
            f"walk-matrix rank is {rank}"
        )
        self.s_float = s_float
        self.rank = rank


@dataclass(frozen=True)
class GraphAnalysis:
    """Everything the checkers need about one graph.

    ``s_float`` is the float route's own count before any fallback (None when
    classification refused to guess); ``spectrum`` always carries final flags.
    """

    graph: Graph
    spectrum: spectra.MainSpectrum
    rank: int
    s_float: int | None
    used_fallback: bool
    harmonic_level: int | None
    decomposition: spectra.EigenDecomposition | None = None

    @property
    def main_count(self) -> int:
        return self.spectrum.main_count

    @property
    def is_harmonic(self) -> bool:
        return self.harmonic_level is not None

    def eigenvalue(self, index: int) -> float:
        """Eigenvalue by sorted position (0 = largest), honoring multiplicities."""
        pos = 0
        for grp in self.spectrum.groups:
            pos += grp.multiplicity
            if index < pos:
                return grp.value
        raise IndexError(index)

    @property
    def lambda_min(self) -> float:
        return self.spectrum.groups[-1].value

    @property
    def lambda_max(self) -> float:
        return self.spectrum.groups[0].value


def resolve_spectrum(
    spectrum: spectra.MainSpectrum, flags: list[bool], gray: list[int], rank: int
) -> tuple[spectra.MainSpectrum, int | None, bool]:
    """Combine threshold flags with the exact rank; returns (final, s_float, fallback).

    No gray groups: the float flags stand, and disagreement with the rank is
    the caller's business to surface.  Gray groups present: the float count is
    meaningless, so the exact rank picks how many groups are main.
    """
    if not gray:
        classified = spectra.MainSpectrum(
            tuple(
                spectra.EigenGroup(g.value, g.multiplicity, g.projection_norm_sq, f)
                for g, f in zip(spectrum.groups, flags)
            )
        )
        return classified, classified.main_count, False
    return spectra.resolve_with_rank(spectrum, rank), None, True


def analyze_graph(
    g: Graph, *, keep_decomposition: bool = False, strict: bool = True
) -> GraphAnalysis:
    """Run both routes on one graph and reconcile them.

    Raises RouteDisagreementError when the confident float count and the exact
    rank differ; that situation means a real bug (or a tolerance failure) and
    must abort the caller visibly.  ``strict=False`` returns the analysis
    anyway (float flags kept) so that sweep checkers can report the
    disagreement as a finding instead of dying mid-stream.
    """
    dec = spectra.eigen_decompose(g)
    spectrum = spectra.group_eigenvalues(dec)
    flags, gray = spectra.classify_flags(spectrum.groups, g.n)
    rank = exact.walk_matrix(g).rank
    resolved, s_float, used_fallback = resolve_spectrum(spectrum, flags, gray, rank)
    if strict and s_float is not None and s_float != rank:
        raise RouteDisagreementError(s_float, rank)
    return GraphAnalysis(
        graph=g,
        spectrum=resolved,
        rank=rank,
        s_float=s_float,
        used_fallback=used_fallback,
        harmonic_level=exact.harmonic_ell(g),
        decomposition=dec if keep_decomposition else None,
    )


def analyze_pair(g: Graph, *, strict: bool = True) -> tuple[GraphAnalysis, GraphAnalysis]:
    """Analyze a graph and its complement (most complement claims need both)."""
    return analyze_graph(g, strict=strict), analyze_graph(g.complement(), strict=strict)
