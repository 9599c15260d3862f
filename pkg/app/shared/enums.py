from enum import Enum


class ArithOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


class ElementaryFn(str, Enum):
    SQRT = "sqrt"
    LN = "ln"
    SIN = "sin"
    COS = "cos"
    POWI = "powi"


class SumPolicyKind(str, Enum):
    SEQUENTIAL = "sequential"
    CHUNKED = "chunked"


class TailMode(str, Enum):
    OVER_T2 = "over_t2"
    OVER_T3 = "over_t3"


class CheckpointMode(str, Enum):
    MIDPOINTS = "midpoints"
    EDGES = "edges"


class HNormalization(str, Enum):
    DIVIDED = "divided"
    PRINTED = "printed"


class PairKernel(str, Enum):
    B_SERIES = "b_series"
    S_SERIES = "s_series"
    C2_SERIES = "c2_series"


class ConstantName(str, Enum):
    C1 = "c1"
    C2 = "c2"
    C3 = "c3"


class OutputFormat(str, Enum):
    TEXT = "text"
    KV = "kv"
