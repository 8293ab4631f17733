"""Core domain types and catalog validation.

All values are immutable after construction; validation is a pure function
that reports violations as data rather than raising.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional


@dataclass(frozen=True)
class Skill:
    name: str
    # Subject ids ordered consistently with the prerequisite relation.
    subject_list: tuple[str, ...]


@dataclass(frozen=True)
class Subject:
    id: str
    name: str
    prerequisite_set: frozenset[str]
    learning_object_set: frozenset[str]

    @property
    def is_basic(self) -> bool:
        return not self.prerequisite_set


@dataclass(frozen=True)
class LearningObject:
    id: str
    name: str
    subject: str
    location: str
    video_component: int
    audio_component: int
    text_component: int
    size: int        # bytes
    duration: int    # seconds

    @property
    def bitrate(self) -> Fraction:
        """Exact bandwidth requirement in bytes per second."""
        return Fraction(self.size, self.duration)


@dataclass(frozen=True)
class DeviceProfile:
    id: str
    max_bandwidth: float  # bytes per second
    video_enabled: int
    audio_enabled: int
    text_enabled: int


@dataclass(frozen=True)
class UserProfile:
    id: str
    desired_skill: Optional[str]
    acquired_skill_set: frozenset[str]
    known_subject_set: frozenset[tuple[str, str]]  # (subject id, subject name)
    max_time: float  # seconds

    def known_subject_ids(self) -> frozenset[str]:
        return frozenset(sid for sid, _ in self.known_subject_set)


@dataclass(frozen=True)
class SessionEnvironment:
    network_bandwidth: float  # bytes per second


@dataclass(frozen=True)
class LearningProgram:
    # Exactly one learning object per subject of the dependency graph.
    assignment: dict[str, str]
    # Pairs (object a, object b): a must be studied before b.
    order_pairs: frozenset[tuple[str, str]]
    objective_value: Fraction  # sum of selected bitrates, bytes per second

    def __len__(self) -> int:
        return len(self.assignment)


@dataclass(frozen=True)
class Catalog:
    """A full content catalog: subjects, learning objects and skills.

    Input order is preserved so that validation can flag duplicate ids;
    the lookup tables keep the first occurrence.
    """

    subjects: tuple[Subject, ...]
    learning_objects: tuple[LearningObject, ...]
    skills: tuple[Skill, ...]

    def __post_init__(self):
        by_id = {}
        for s in self.subjects:
            by_id.setdefault(s.id, s)
        obj_by_id = {}
        for o in self.learning_objects:
            obj_by_id.setdefault(o.id, o)
        skill_by_name = {}
        for sk in self.skills:
            skill_by_name.setdefault(sk.name, sk)
        object.__setattr__(self, "_subject_by_id", by_id)
        object.__setattr__(self, "_object_by_id", obj_by_id)
        object.__setattr__(self, "_skill_by_name", skill_by_name)

    @property
    def subject_by_id(self) -> dict[str, Subject]:
        return self._subject_by_id

    @property
    def object_by_id(self) -> dict[str, LearningObject]:
        return self._object_by_id

    @property
    def skill_by_name(self) -> dict[str, Skill]:
        return self._skill_by_name


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations


def _nontrivial_sccs(nodes, edges):
    """Strongly connected components with more than one node or a self-loop.

    ``edges`` maps node -> iterable of successor nodes. Iterative Tarjan.
    """
    index = {}
    lowlink = {}
    on_stack = set()
    stack = []
    sccs = []
    counter = [0]

    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(edges.get(root, ())))]
        index[root] = lowlink[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for succ in it:
                if succ not in index:
                    index[succ] = lowlink[succ] = counter[0]
                    counter[0] += 1
                    stack.append(succ)
                    on_stack.add(succ)
                    work.append((succ, iter(edges.get(succ, ()))))
                    advanced = True
                    break
                elif succ in on_stack:
                    lowlink[node] = min(lowlink[node], index[succ])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])
            if lowlink[node] == index[node]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == node:
                        break
                if len(comp) > 1 or node in edges.get(node, ()):
                    sccs.append(sorted(comp))
    return sccs


def prerequisite_cycles(catalog: Catalog) -> list[list[str]]:
    """Subject-id groups that participate in prerequisite cycles."""
    edges = {}
    known_ids = set(catalog.subject_by_id)
    for s in catalog.subjects:
        edges[s.id] = sorted(p for p in s.prerequisite_set if p in known_ids)
    return _nontrivial_sccs(sorted(known_ids), edges)


def validate_catalog(catalog: Catalog) -> ValidationReport:
    """Check every catalog invariant and report all violations found.

    An empty report means the catalog is well-formed and the prerequisite
    relation is a DAG. Deterministic: identical input yields an identical
    report.
    """
    out: list[Violation] = []

    seen = set()
    for s in catalog.subjects:
        if s.id in seen:
            out.append(Violation("duplicate-subject-id", s.id))
        seen.add(s.id)
    seen = set()
    for o in catalog.learning_objects:
        if o.id in seen:
            out.append(Violation("duplicate-object-id", o.id))
        seen.add(o.id)
    seen = set()
    for sk in catalog.skills:
        if not sk.name:
            out.append(Violation("empty-skill-name", "<empty>"))
        if sk.name in seen:
            out.append(Violation("duplicate-skill-name", sk.name))
        seen.add(sk.name)

    subjects = catalog.subject_by_id
    objects = catalog.object_by_id

    for s in catalog.subjects:
        if s.id in s.prerequisite_set:
            out.append(Violation("self-prerequisite", s.id))
        for p in sorted(s.prerequisite_set):
            if p not in subjects:
                out.append(Violation("dangling-prerequisite", f"{s.id} -> {p}"))
        for oid in sorted(s.learning_object_set):
            obj = objects.get(oid)
            if obj is None:
                out.append(Violation("dangling-subject-object", f"{s.id} -> {oid}"))
            elif obj.subject != s.id:
                out.append(
                    Violation("object-subject-mismatch", f"{s.id} lists {oid} of {obj.subject}")
                )

    for o in catalog.learning_objects:
        subj = subjects.get(o.subject)
        if subj is None:
            out.append(Violation("dangling-object-subject", f"{o.id} -> {o.subject}"))
        elif o.id not in subj.learning_object_set:
            out.append(Violation("object-not-listed-by-subject", f"{o.id} not in {o.subject}"))
        if not (o.video_component or o.audio_component or o.text_component):
            out.append(Violation("no-media-component", o.id))
        if o.size <= 0:
            out.append(Violation("non-positive-size", o.id))
        if o.duration <= 0:
            out.append(Violation("non-positive-duration", o.id))

    for cycle in prerequisite_cycles(catalog):
        out.append(Violation("prerequisite-cycle", "{" + ", ".join(cycle) + "}"))

    for sk in catalog.skills:
        position = {}
        for i, sid in enumerate(sk.subject_list):
            if sid in position:
                out.append(Violation("duplicate-skill-subject", f"{sk.name}: {sid}"))
            position.setdefault(sid, i)
            if sid not in subjects:
                out.append(Violation("dangling-skill-subject", f"{sk.name}: {sid}"))
        for sid in sk.subject_list:
            subj = subjects.get(sid)
            if subj is None:
                continue
            for p in sorted(subj.prerequisite_set):
                if p in position and position[p] >= position[sid]:
                    out.append(
                        Violation("skill-order-violation", f"{sk.name}: {p} after {sid}")
                    )

    return ValidationReport(tuple(out))
