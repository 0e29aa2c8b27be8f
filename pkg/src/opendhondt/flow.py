"""Dinic max-flow on small integer networks."""

from collections import deque


class FlowNetwork:
    def __init__(self, num_nodes):
        self.n = num_nodes
        self.adj = [[] for _ in range(num_nodes)]
        # edge i: to[i], cap[i]; reverse edge is i ^ 1
        self.to = []
        self.cap = []

    def add_edge(self, u, v, cap):
        """Add ``u -> v`` and return the edge index (for reading its flow)."""
        idx = len(self.to)
        self.to += [v, u]
        self.cap += [cap, 0]
        self.adj[u].append(idx)
        self.adj[v].append(idx + 1)
        return idx

    def flow_on(self, idx):
        return self.cap[idx ^ 1]

    def _levels(self, s, t):
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.adj[u]:
                if self.cap[e] > 0 and level[self.to[e]] < 0:
                    level[self.to[e]] = level[u] + 1
                    queue.append(self.to[e])
        return level if level[t] >= 0 else None

    def _push(self, u, t, limit, level, it):
        if u == t:
            return limit
        while it[u] < len(self.adj[u]):
            e = self.adj[u][it[u]]
            v = self.to[e]
            if self.cap[e] > 0 and level[v] == level[u] + 1:
                got = self._push(v, t, min(limit, self.cap[e]), level, it)
                if got:
                    self.cap[e] -= got
                    self.cap[e ^ 1] += got
                    return got
            it[u] += 1
        return 0

    def max_flow(self, s, t):
        total = 0
        inf = sum(c for c in self.cap) + 1
        while True:
            level = self._levels(s, t)
            if level is None:
                return total
            it = [0] * self.n
            while True:
                got = self._push(s, t, inf, level, it)
                if not got:
                    break
                total += got

    def source_side(self, s):
        """Nodes reachable from ``s`` in the residual graph (after max_flow)."""
        seen = [False] * self.n
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.adj[u]:
                v = self.to[e]
                if self.cap[e] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return seen
