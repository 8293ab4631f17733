"""Exception types shared across the package."""


class SkillplanError(Exception):
    """Base class for all package errors."""


class MalformedXmlError(SkillplanError):
    """Input is not well-formed XML."""


class SchemaViolationError(SkillplanError):
    """A document does not conform to one of the published schemas.

    ``detail`` names the offending element or attribute.
    """

    def __init__(self, detail, message=None):
        self.detail = detail
        super().__init__(message or f"schema violation: {detail}")


class UnknownTargetError(SkillplanError):
    """The requested target subject does not exist in the catalog."""


class UnknownSkillError(SkillplanError):
    """The requested skill name does not exist in the catalog."""


class CyclicCatalogError(SkillplanError):
    """The prerequisite relation contains a cycle."""


class InstanceTooLargeError(SkillplanError):
    """A solver instance exceeds the documented size limits."""


class PolicyChoiceError(SkillplanError):
    """A user policy returned a choice outside the offered list."""


class InvalidEventError(SkillplanError):
    """A session event is not valid in the current phase."""
