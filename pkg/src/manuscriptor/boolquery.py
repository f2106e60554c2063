"""Keyword filter language: `term1 term2|term3 !term4`.

Whitespace separates AND-groups, `|` separates OR-alternatives inside a
group, and a leading `!` negates the whole group (`!a|b` == NOT(a or b)).
Terms are normalized with the index token pipeline, so a filter matches
exactly what the inverted index stores. A document matches when every
plain group contributes at least one present term and no negated group
contributes any.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import FilterSyntaxError
from .textproc import Pipeline, tokenize


@dataclass(frozen=True)
class Clause:
    negated: bool
    alternatives: tuple[str, ...]  # normalized unigrams, nonempty


@dataclass(frozen=True)
class FilterQuery:
    clauses: tuple[Clause, ...]

    @property
    def match_all(self) -> bool:
        return not self.clauses


MATCH_ALL = FilterQuery(clauses=())


def parse_filter(raw: str) -> FilterQuery:
    """Parse a raw filter string; empty input matches everything."""
    clauses = []
    for group in raw.split():
        negated = group.startswith("!")
        body = group[1:] if negated else group
        if not body:
            raise FilterSyntaxError(f"filter group {group!r} has no terms", group=group)
        parts = body.split("|")
        if any(not part for part in parts):
            raise FilterSyntaxError(f"filter group {group!r} has an empty alternative", group=group)
        alternatives: list[str] = []
        for part in parts:
            terms = tokenize(part, Pipeline.INDEX)
            if len(terms) > 1:
                raise FilterSyntaxError(
                    f"alternative {part!r} in group {group!r} is not a single term",
                    group=group,
                )
            if terms and terms[0] not in alternatives:
                alternatives.append(terms[0])
        if not alternatives:
            raise FilterSyntaxError(
                f"filter group {group!r} normalizes to nothing", group=group
            )
        clauses.append(Clause(negated=negated, alternatives=tuple(alternatives)))
    return FilterQuery(clauses=tuple(clauses))


def render_filter(query: FilterQuery) -> str:
    """Canonical text form; parse_filter(render_filter(q)) == q."""
    groups = []
    for clause in query.clauses:
        prefix = "!" if clause.negated else ""
        groups.append(prefix + "|".join(clause.alternatives))
    return " ".join(groups)


def query_terms(query: FilterQuery) -> set[str]:
    """Union of all alternatives across clauses."""
    terms: set[str] = set()
    for clause in query.clauses:
        terms.update(clause.alternatives)
    return terms


def matches(query: FilterQuery, doc_terms: Iterable[str]) -> bool:
    """Evaluate the clause semantics against one document's term set."""
    present = doc_terms if isinstance(doc_terms, (set, frozenset)) else set(doc_terms)
    for clause in query.clauses:
        hit = any(term in present for term in clause.alternatives)
        if clause.negated == hit:
            return False
    return True
