"""Disjoint sets over carrier indices 0..n-1 (union by rank, path compression)."""


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def groups(self) -> list[list[int]]:
        """Blocks as ascending index lists, ordered by their smallest index."""
        blocks: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            blocks.setdefault(self.find(x), []).append(x)
        return sorted(blocks.values(), key=lambda block: block[0])

    def __len__(self) -> int:
        return sum(1 for x in range(len(self.parent)) if self.find(x) == x)
