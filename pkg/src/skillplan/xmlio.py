"""XML codecs for the three document formats and the agent message envelope.

Formats (schema files live in ``skillplan/schemas/``):

* user/device profile document (``UDAOntology`` root),
* content catalog document (``Catalog`` root: skills, subjects, objects),
* agent message envelope (``message`` root, ACL-style parameters).

Decoding ignores inter-element whitespace; encoding is deterministic
byte-for-byte for a fixed value, with an explicit UTF-8 declaration.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Optional
from xml.sax.saxutils import escape, quoteattr

from .errors import MalformedXmlError, SchemaViolationError
from .model import Catalog, DeviceProfile, LearningObject, Skill, Subject, UserProfile

XML_DECLARATION = '<?xml version="1.0" encoding="UTF-8"?>'
ACML_DOCTYPE = '<!DOCTYPE fipa_acl SYSTEM "fipa_acl.dtd">'

PARAMETER_KINDS = ("sender", "receiver", "ontology", "content", "reply-with", "in-reply-to")


@dataclass(frozen=True)
class AcmlParameter:
    kind: str
    text: str
    link: Optional[str] = None


@dataclass(frozen=True)
class AcmlMessage:
    message_type: str
    parameters: tuple[AcmlParameter, ...]

    def find(self, kind: str) -> Optional[AcmlParameter]:
        for p in self.parameters:
            if p.kind == kind:
                return p
        return None

    def validate(self) -> None:
        if not self.message_type:
            raise SchemaViolationError("messagetype", "empty message type")
        for p in self.parameters:
            if p.kind not in PARAMETER_KINDS:
                raise SchemaViolationError(p.kind, f"unknown parameter kind {p.kind!r}")
        for kind in ("sender", "receiver"):
            n = sum(1 for p in self.parameters if p.kind == kind)
            if n != 1:
                raise SchemaViolationError(kind, f"{kind} must appear exactly once, found {n}")


def _fromstring(xml_text: str) -> ET.Element:
    try:
        return ET.fromstring(xml_text)
    except ET.ParseError as exc:
        raise MalformedXmlError(str(exc)) from exc


def _req_attr(elem: ET.Element, name: str) -> str:
    value = elem.get(name)
    if value is None:
        raise SchemaViolationError(name, f"missing required attribute {name!r} on <{elem.tag}>")
    return value


def _parse_float(elem: ET.Element, name: str, positive=False) -> float:
    raw = _req_attr(elem, name)
    try:
        value = float(raw)
    except ValueError:
        raise SchemaViolationError(name, f"attribute {name!r} is not a number: {raw!r}")
    if positive and value <= 0:
        raise SchemaViolationError(name, f"attribute {name!r} must be positive: {raw!r}")
    return value


def _parse_flag(elem: ET.Element, name: str) -> int:
    raw = _req_attr(elem, name)
    if raw not in ("0", "1"):
        raise SchemaViolationError(name, f"attribute {name!r} must be 0 or 1: {raw!r}")
    return int(raw)


def _parse_int(elem: ET.Element, name: str, positive=False) -> int:
    raw = _req_attr(elem, name)
    try:
        value = int(raw)
    except ValueError:
        raise SchemaViolationError(name, f"attribute {name!r} is not an integer: {raw!r}")
    if positive and value <= 0:
        raise SchemaViolationError(name, f"attribute {name!r} must be positive: {raw!r}")
    return value


def _child(root: ET.Element, tag: str) -> ET.Element:
    elem = root.find(tag)
    if elem is None:
        raise SchemaViolationError(tag, f"missing required element <{tag}> under <{root.tag}>")
    return elem


# ---------------------------------------------------------------------------
# user/device profile document


def parse_uda_ontology(xml_text: str) -> tuple[DeviceProfile, UserProfile]:
    root = _fromstring(xml_text)
    if root.tag != "UDAOntology":
        raise SchemaViolationError(root.tag, f"expected root <UDAOntology>, got <{root.tag}>")

    dp_elem = _child(root, "DP")
    device = DeviceProfile(
        id=_req_attr(dp_elem, "DId"),
        max_bandwidth=_parse_float(dp_elem, "BMax", positive=True),
        video_enabled=_parse_flag(dp_elem, "VE"),
        audio_enabled=_parse_flag(dp_elem, "AE"),
        text_enabled=_parse_flag(dp_elem, "TE"),
    )
    if not (device.video_enabled or device.audio_enabled or device.text_enabled):
        raise SchemaViolationError("DP", "device must enable at least one media kind")

    up_elem = _child(root, "UP")
    acquired = frozenset(
        (e.text or "").strip() for e in _child(up_elem, "AcqSkillSet").findall("AcqSkill")
    )
    known = []
    for e in _child(up_elem, "KnownSubjSet").findall("KnownSubj"):
        known.append((_req_attr(e, "SubjId"), _req_attr(e, "SubjName")))
    ids = [sid for sid, _ in known]
    if len(set(ids)) != len(ids):
        raise SchemaViolationError("KnownSubjSet", "duplicate known-subject ids")

    desired = up_elem.get("DesSkill")
    if desired is not None and desired in acquired:
        raise SchemaViolationError("DesSkill", "desired skill already acquired")
    user = UserProfile(
        id=_req_attr(up_elem, "UId"),
        desired_skill=desired,
        acquired_skill_set=acquired,
        known_subject_set=frozenset(known),
        max_time=_parse_float(up_elem, "MaxTime", positive=True),
    )
    return device, user


def serialize_uda_ontology(device: DeviceProfile, user: UserProfile) -> str:
    lines = [XML_DECLARATION, "<UDAOntology>"]
    lines.append(
        f'  <DP DId={quoteattr(device.id)} BMax={quoteattr(repr(float(device.max_bandwidth)))}'
        f' VE="{device.video_enabled}" AE="{device.audio_enabled}"'
        f' TE="{device.text_enabled}"/>'
    )
    up_attrs = f"UId={quoteattr(user.id)}"
    if user.desired_skill is not None:
        up_attrs += f" DesSkill={quoteattr(user.desired_skill)}"
    up_attrs += f" MaxTime={quoteattr(repr(float(user.max_time)))}"
    lines.append(f"  <UP {up_attrs}>")
    if user.acquired_skill_set:
        lines.append("    <AcqSkillSet>")
        for name in sorted(user.acquired_skill_set):
            lines.append(f"      <AcqSkill>{escape(name)}</AcqSkill>")
        lines.append("    </AcqSkillSet>")
    else:
        lines.append("    <AcqSkillSet/>")
    if user.known_subject_set:
        lines.append("    <KnownSubjSet>")
        for sid, name in sorted(user.known_subject_set):
            lines.append(f"      <KnownSubj SubjId={quoteattr(sid)} SubjName={quoteattr(name)}/>")
        lines.append("    </KnownSubjSet>")
    else:
        lines.append("    <KnownSubjSet/>")
    lines.append("  </UP>")
    lines.append("</UDAOntology>")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# catalog document


def parse_catalog(xml_text: str) -> Catalog:
    """Structural parse of a catalog document.

    Referential integrity (dangling ids, cycles, ...) is not enforced here;
    run ``model.validate_catalog`` on the result and report its violations.
    """
    root = _fromstring(xml_text)
    if root.tag != "Catalog":
        raise SchemaViolationError(root.tag, f"expected root <Catalog>, got <{root.tag}>")

    skills = []
    for sk in _child(root, "SkillSet").findall("Skill"):
        subj_list = tuple(
            _req_attr(ref, "SubjId") for ref in _child(sk, "SkSubjList").findall("SubjRef")
        )
        skills.append(Skill(name=_req_attr(sk, "SkName"), subject_list=subj_list))

    subjects = []
    for s in _child(root, "SubjSet").findall("Subj"):
        prereqs = frozenset(
            _req_attr(ref, "SubjId") for ref in _child(s, "SubjPrereqSet").findall("SubjRef")
        )
        objset = frozenset(
            _req_attr(ref, "LObjId") for ref in _child(s, "SubjLObjSet").findall("LObjRef")
        )
        subjects.append(
            Subject(id=_req_attr(s, "SubjId"), name=_req_attr(s, "SubjName"),
                    prerequisite_set=prereqs, learning_object_set=objset)
        )

    objects = []
    for o in _child(root, "LObjSet").findall("LObj"):
        objects.append(
            LearningObject(
                id=_req_attr(o, "LObjId"),
                name=_req_attr(o, "LObjName"),
                subject=_req_attr(o, "LObjSubject"),
                location=_req_attr(o, "LObjLocation"),
                video_component=_parse_flag(o, "LObjVC"),
                audio_component=_parse_flag(o, "LObjAC"),
                text_component=_parse_flag(o, "LObjTC"),
                size=_parse_int(o, "LObjSize", positive=True),
                duration=_parse_int(o, "LObjDuration", positive=True),
            )
        )

    return Catalog(tuple(subjects), tuple(objects), tuple(skills))


def serialize_catalog(catalog: Catalog) -> str:
    lines = [XML_DECLARATION, "<Catalog>"]

    if catalog.skills:
        lines.append("  <SkillSet>")
        for sk in catalog.skills:
            lines.append(f"    <Skill SkName={quoteattr(sk.name)}>")
            if sk.subject_list:
                lines.append("      <SkSubjList>")
                for sid in sk.subject_list:
                    lines.append(f"        <SubjRef SubjId={quoteattr(sid)}/>")
                lines.append("      </SkSubjList>")
            else:
                lines.append("      <SkSubjList/>")
            lines.append("    </Skill>")
        lines.append("  </SkillSet>")
    else:
        lines.append("  <SkillSet/>")

    if catalog.subjects:
        lines.append("  <SubjSet>")
        for s in catalog.subjects:
            lines.append(f"    <Subj SubjId={quoteattr(s.id)} SubjName={quoteattr(s.name)}>")
            if s.prerequisite_set:
                lines.append("      <SubjPrereqSet>")
                for p in sorted(s.prerequisite_set):
                    lines.append(f"        <SubjRef SubjId={quoteattr(p)}/>")
                lines.append("      </SubjPrereqSet>")
            else:
                lines.append("      <SubjPrereqSet/>")
            if s.learning_object_set:
                lines.append("      <SubjLObjSet>")
                for oid in sorted(s.learning_object_set):
                    lines.append(f"        <LObjRef LObjId={quoteattr(oid)}/>")
                lines.append("      </SubjLObjSet>")
            else:
                lines.append("      <SubjLObjSet/>")
            lines.append("    </Subj>")
        lines.append("  </SubjSet>")
    else:
        lines.append("  <SubjSet/>")

    if catalog.learning_objects:
        lines.append("  <LObjSet>")
        for o in catalog.learning_objects:
            lines.append(
                f"    <LObj LObjId={quoteattr(o.id)} LObjName={quoteattr(o.name)}"
                f" LObjSubject={quoteattr(o.subject)} LObjLocation={quoteattr(o.location)}"
                f' LObjVC="{o.video_component}" LObjAC="{o.audio_component}"'
                f' LObjTC="{o.text_component}" LObjSize="{o.size}"'
                f' LObjDuration="{o.duration}"/>'
            )
        lines.append("  </LObjSet>")
    else:
        lines.append("  <LObjSet/>")

    lines.append("</Catalog>")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# agent message envelope


def encode_acml(msg: AcmlMessage) -> str:
    msg.validate()
    lines = [XML_DECLARATION, ACML_DOCTYPE, "<message>"]
    lines.append(f"  <messagetype>{escape(msg.message_type)}</messagetype>")
    for p in msg.parameters:
        link = f" link={quoteattr(p.link)}" if p.link is not None else ""
        lines.append(
            f"  <messageparameter><{p.kind}{link}>{escape(p.text)}</{p.kind}></messageparameter>"
        )
    lines.append("</message>")
    return "\n".join(lines) + "\n"


def decode_acml(xml_text: str) -> AcmlMessage:
    root = _fromstring(xml_text)
    if root.tag != "message":
        raise SchemaViolationError(root.tag, f"expected root <message>, got <{root.tag}>")

    mt_elem = _child(root, "messagetype")
    message_type = (mt_elem.text or "").strip()

    parameters = []
    for wrapper in root.findall("messageparameter"):
        children = list(wrapper)
        if len(children) != 1:
            raise SchemaViolationError(
                "messageparameter", "each <messageparameter> holds exactly one parameter")
        elem = children[0]
        if elem.tag not in PARAMETER_KINDS:
            raise SchemaViolationError(elem.tag, f"unknown parameter <{elem.tag}>")
        parameters.append(
            AcmlParameter(kind=elem.tag, text=(elem.text or "").strip(), link=elem.get("link"))
        )

    msg = AcmlMessage(message_type, tuple(parameters))
    msg.validate()
    return msg
