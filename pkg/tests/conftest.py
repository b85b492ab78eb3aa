from wittcoh.partitions import MarkedPartition, Partition


def P(*parts):
    return Partition(tuple(parts))


def M(parts, marks=()):
    return MarkedPartition(Partition(tuple(parts)), tuple(marks))
