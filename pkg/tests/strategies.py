from hypothesis import strategies as st

from zerograph.partitions import all_partitions


def partitions(min_n: int = 0, max_n: int = 12):
    return st.integers(min_n, max_n).flatmap(lambda n: st.sampled_from(all_partitions(n)))
