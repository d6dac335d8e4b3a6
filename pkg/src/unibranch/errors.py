class ValidationError(ValueError):
    """Input violates an invariant; the message names the first violated one."""


class ParseError(ValidationError):
    def __init__(self, message: str, text: str, offset: int):
        self.text = text
        self.offset = offset
        super().__init__(f"{message} (at byte {offset} of {text!r})")


class ContractError(ValueError):
    """A precondition of an oracle operation was not met by the caller."""
