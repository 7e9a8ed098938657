"""
Counting graphs by size
=======================

The enumerator walks down from K_n one edge at a time, keeping one
canonical graph per isomorphism class.
"""

from pancyclic import EnumFilter, count_by_size
from pancyclic.enumeration import count_classes

for n in range(1, 9):
    table = count_by_size(n)
    print(n, sum(table.values()), list(table.values()))

# complementation pairs size m with n(n-1)/2 - m
table = count_by_size(7)
print(all(table[m] == table[21 - m] for m in table))

# filters: connected, nonbipartite, a size window
print(count_classes(EnumFilter(7, connected_only=True)))
print(count_classes(EnumFilter(7, 11, 21, nonbipartite_only=True)))
