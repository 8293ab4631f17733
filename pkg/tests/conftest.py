"""Shared builders for the test suite."""

from __future__ import annotations

import random

from skillplan.graph import SubjectDependencyGraph, build_sdg, topological_order
from skillplan.model import Catalog, LearningObject, Skill, Subject
from skillplan.solver import ChoiceEntry, FeasibleChoiceTable


def obj(oid, sid, size, duration, v=0, a=0, t=1, name=None):
    return LearningObject(
        id=oid, name=name or f"object {oid}", subject=sid,
        location=f"http://content.example/{oid}",
        video_component=v, audio_component=a, text_component=t,
        size=size, duration=duration,
    )


def subj(sid, prereqs=(), objects=(), name=None):
    return Subject(
        id=sid, name=name or f"subject {sid}",
        prerequisite_set=frozenset(prereqs),
        learning_object_set=frozenset(objects),
    )


def catalog_of(subjects, objects=(), skills=()):
    return Catalog(tuple(subjects), tuple(objects), tuple(skills))


def chain_catalog(n=3, objects_per_subject=2):
    """Subjects c0 <- c1 <- ... <- c{n-1} (arrow = prerequisite-of)."""
    subjects, objects = [], []
    for i in range(n):
        oids = []
        for j in range(objects_per_subject):
            oid = f"o{i}{j}"
            oids.append(oid)
            objects.append(obj(oid, f"c{i}", size=1000 * (j + 1), duration=100))
        prereqs = {f"c{i - 1}"} if i else set()
        subjects.append(subj(f"c{i}", prereqs, oids))
    skills = (Skill("chain skill", tuple(f"c{i}" for i in range(n))),)
    return catalog_of(subjects, objects, skills)


def random_dag_catalog(rng: random.Random, max_subjects=8, with_objects=False):
    """Small random acyclic catalog; prerequisites point at earlier ids."""
    n = rng.randint(1, max_subjects)
    subjects, objects = [], []
    for i in range(n):
        prereqs = {f"s{j}" for j in range(i) if rng.random() < 0.4}
        oids = []
        if with_objects:
            for j in range(rng.randint(1, 3)):
                oid = f"s{i}x{j}"
                oids.append(oid)
                objects.append(obj(
                    oid, f"s{i}",
                    size=rng.randint(1, 5000), duration=rng.randint(1, 200),
                    v=rng.randint(0, 1), a=rng.randint(0, 1), t=1,
                ))
        subjects.append(subj(f"s{i}", prereqs, oids))
    return catalog_of(subjects, objects)


def random_instance(rng: random.Random, max_subjects=5, max_objects=4,
                    max_duration=200, empty_rows=False):
    """Random dependency graph plus feasible-choice table for solver tests."""
    n = rng.randint(1, max_subjects)
    nodes = [f"s{i}" for i in range(n)]
    arcs = {(nodes[i], nodes[j])
            for i in range(n) for j in range(i + 1, n) if rng.random() < 0.3}
    sdg = SubjectDependencyGraph(frozenset(nodes), frozenset(arcs), nodes[-1])
    order = tuple(topological_order(sdg))
    rows = {}
    for sid in order:
        k = rng.randint(0 if empty_rows else 1, max_objects)
        entries = tuple(
            ChoiceEntry(f"{sid}o{j}", rng.randint(1, 4000), rng.randint(1, max_duration))
            for j in range(k)
        )
        rows[sid] = entries
    table = FeasibleChoiceTable(order, rows)
    max_time = rng.randint(1, n * max_duration + 50)
    return sdg, table, max_time


def sdg_chain_oracle(catalog, known, target):
    """Independent graph oracle: union of all prerequisite chains into target.

    A chain walks backward from the target through not-yet-known subjects
    and is complete once it reaches a subject with no unknown prerequisites.
    Returns (nodes, arcs) or None when the target is already known.
    """
    known = frozenset(known)
    if target in known:
        return frozenset(), frozenset()
    by_id = catalog.subject_by_id

    chains = []

    def extend(path):
        tail = path[-1]
        unknown_prereqs = [p for p in sorted(by_id[tail].prerequisite_set)
                           if p not in known and p in by_id]
        if not unknown_prereqs:
            chains.append(tuple(path))
            return
        for p in unknown_prereqs:
            extend(path + [p])

    extend([target])
    nodes = frozenset(s for chain in chains for s in chain)
    arcs = frozenset(
        (p, s) for s in nodes for p in by_id[s].prerequisite_set if p in nodes
    )
    return nodes, arcs
