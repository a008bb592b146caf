from enum import Enum


class Verdict(Enum):
    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"
    UNIQUE = "unique"

    def __str__(self):
        return self.value


class Applicability(Enum):
    APPLIES = "applies"
    FAILS = "fails"
    INAPPLICABLE = "inapplicable"

    def __str__(self):
        return self.value


class Realizability(Enum):
    REALIZABLE = "realizable"
    OBSTRUCTED = "obstructed"
    NOT_DEFINITE = "not-definite"
    INCONCLUSIVE = "inconclusive"

    def __str__(self):
        return self.value
