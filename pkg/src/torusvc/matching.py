"""Maximum bipartite matching via augmenting paths.

Sizes here are tiny (rows = matrix rows, columns = matrix columns), so the
classic Kuhn algorithm is plenty.  Neighbour lists are explored in
ascending column order, which makes the returned matching deterministic.
"""


def maximum_matching(adjacency, n_right: int):
    """Match left vertices to right vertices.

    adjacency[i] is the sorted list of right vertices available to left
    vertex i.  Returns (size, match) where match[i] is the right vertex
    matched to left i, or None.
    """
    match_left = [None] * len(adjacency)
    match_right = [None] * n_right

    def augment(i, visited):
        for j in adjacency[i]:
            if j in visited:
                continue
            visited.add(j)
            if match_right[j] is None or augment(match_right[j], visited):
                match_left[i] = j
                match_right[j] = i
                return True
        return False

    size = 0
    for i in range(len(adjacency)):
        if augment(i, set()):
            size += 1
    return size, match_left


def deficient_set(adjacency, n_right: int):
    """A Hall violator for an unmatchable instance.

    Returns (rows, neighbourhood) with |neighbourhood| < |rows|, or None if
    a perfect matching of all left vertices exists.
    """
    size, match_left = maximum_matching(adjacency, n_right)
    if size == len(adjacency):
        return None
    match_right = [None] * n_right
    for i, j in enumerate(match_left):
        if j is not None:
            match_right[j] = i
    free = next(i for i, j in enumerate(match_left) if j is None)
    # alternating reachability from the free vertex
    rows = {free}
    cols = set()
    frontier = [free]
    while frontier:
        i = frontier.pop()
        for j in adjacency[i]:
            if j in cols:
                continue
            cols.add(j)
            i2 = match_right[j]
            if i2 is not None and i2 not in rows:
                rows.add(i2)
                frontier.append(i2)
    # every row in rows except the free one is matched into cols
    return sorted(rows), sorted(cols)
