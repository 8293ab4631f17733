"""Catalog filtering queries used during skill and subject selection."""

from __future__ import annotations

from .errors import UnknownSkillError
from .model import Catalog


def available_skills(catalog: Catalog, acquired: frozenset[str] | set[str]) -> list[str]:
    """Skills not yet acquired, in ascending name order."""
    return sorted(sk.name for sk in catalog.skills if sk.name not in acquired)


def remaining_subjects(catalog: Catalog, skill_name: str,
                       known: frozenset[str] | set[str]) -> list[str]:
    """The skill's subjects still to be learned, in the stored order.

    The stored order is consistent with the prerequisite relation, so the
    filtered list stays a valid study order.
    """
    skill = catalog.skill_by_name.get(skill_name)
    if skill is None:
        raise UnknownSkillError(skill_name)
    return [sid for sid in skill.subject_list if sid not in known]


def known_subject_name_mismatches(catalog: Catalog,
                                  known_subject_set: frozenset[tuple[str, str]]) -> list[str]:
    """Profile entries whose stored subject name disagrees with the catalog.

    Profiles carry (id, name) pairs while matching is done by id; this
    reports the disagreements so they are never silently ignored.
    """
    out = []
    for sid, name in sorted(known_subject_set):
        subject = catalog.subject_by_id.get(sid)
        if subject is not None and subject.name != name:
            out.append(f"{sid}: profile says {name!r}, catalog says {subject.name!r}")
    return out
