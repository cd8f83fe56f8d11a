"""First-come numbering: a well-defined process that is fixed only as
queries arrive.

Each distinct number receives the next free index (1, 2, 3, …) the first
time it is asked for, and that value permanently. Which number owns which
index is therefore decided entirely by arrival order: ask in a different
order and you get a different (equally well-defined) assignment.
"""

from __future__ import annotations


class ArrivalNumbering:
    """Single-writer; serialize queries to one instance."""

    def __init__(self):
        self.assignments = {}

    def query(self, n):
        value = self.assignments.get(n)
        if value is None:
            value = len(self.assignments) + 1
            self.assignments[n] = value
        return value

    def items(self):
        """Assignments as (number, value) pairs in arrival order."""
        return list(self.assignments.items())
