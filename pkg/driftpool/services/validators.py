from enum import Enum


class ForecasterKind(str, Enum):
    naive = "naive"
    linear = "linear"
    mlp = "mlp"


class RetrievalScore(str, Enum):
    euclidean = "euclidean"
    mle = "mle"


class StatsScope(str, Enum):
    warm_segment = "warm_segment"
    whole = "whole"
    none = "none"


class PoolEventKind(str, Enum):
    created = "created"
    evolved = "evolved"
    eliminated = "eliminated"
    evicted = "evicted"


class ExitCode(int, Enum):
    success = 0
    validation = 2
    runtime = 3
    io = 4


class Commands(str, Enum):
    run = "run"
    compare = "compare"
    sweep = "sweep"
    generate = "generate"
    purity = "purity"
