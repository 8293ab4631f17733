"""Per-device feasibility filtering of learning objects."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..graph import SubjectDependencyGraph, topological_order
from ..model import Catalog, DeviceProfile, SessionEnvironment


@dataclass(frozen=True)
class ChoiceEntry:
    object_id: str
    size: int
    duration: int

    @property
    def bitrate(self) -> Fraction:
        return Fraction(self.size, self.duration)


@dataclass(frozen=True)
class FeasibleChoiceTable:
    # Subjects in deterministic topological order; rows list feasible
    # objects in ascending object-id order.
    subject_order: tuple[str, ...]
    rows: dict[str, tuple[ChoiceEntry, ...]]


def effective_bandwidth(device: DeviceProfile, env: SessionEnvironment) -> Fraction:
    """min(device cap, network cap), exact."""
    return Fraction(min(device.max_bandwidth, env.network_bandwidth))


def filter_feasible(sdg: SubjectDependencyGraph, catalog: Catalog,
                    device: DeviceProfile, env: SessionEnvironment) -> FeasibleChoiceTable:
    """Keep the objects each SDG subject may use on this device.

    An object is feasible when every media component it carries is enabled
    on the device and its exact bitrate (size/duration) does not exceed the
    effective bandwidth. The bitrate test cross-multiplies integers against
    the exact bandwidth value, so boundary cases never flip on rounding.
    """
    cap = effective_bandwidth(device, env)
    order = tuple(topological_order(sdg))
    rows: dict[str, tuple[ChoiceEntry, ...]] = {}
    for sid in order:
        subject = catalog.subject_by_id[sid]
        entries = []
        for oid in sorted(subject.learning_object_set):
            obj = catalog.object_by_id.get(oid)
            if obj is None:
                continue
            if obj.video_component > device.video_enabled:
                continue
            if obj.audio_component > device.audio_enabled:
                continue
            if obj.text_component > device.text_enabled:
                continue
            if Fraction(obj.size, obj.duration) > cap:
                continue
            entries.append(ChoiceEntry(obj.id, obj.size, obj.duration))
        rows[sid] = tuple(entries)
    return FeasibleChoiceTable(order, rows)
