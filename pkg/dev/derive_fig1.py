"""Derive the 6-vertex 7-edge graph whose cut configuration matches the 8x32 fixture."""
import re, itertools, collections

lines = open('/root/pkg/paper.md').read().split('\n')
def grab(s, e): return '\n'.join(lines[s-1:e])
def parse_matrix(block):
    rows = []
    for ln in block.split('\n'):
        ln = ln.strip()
        if not ln or 'hline' in ln or 'begin' in ln or 'end' in ln: continue
        nums = re.findall(r'\d+', ln.replace('\\\\',' ').replace('&',' '))
        if nums: rows.append([int(x) for x in nums])
    return rows

FIG1 = parse_matrix(grab(325, 332))
assert len(FIG1) == 8 and all(len(r) == 32 for r in FIG1)
assert all(v == 1 for v in FIG1[7])
fix_cols = [tuple(FIG1[r][c] for r in range(7)) for c in range(32)]
fix_colset_sorted = sorted(fix_cols)
fix_weights = sorted(sum(c) for c in fix_cols)
print('fixture col weight multiset:', collections.Counter(sum(c) for c in fix_cols))

def cut_columns(m, edges):
    # representatives: subsets of {2..m} i.e. bitmask over vertices 2..m
    cols = []
    for k in range(2 ** (m - 1)):
        members = {v for v in range(2, m + 1) if (k >> (v - 2)) & 1}
        col = tuple(1 if (u in members) != (v in members) else 0 for (u, v) in edges)
        cols.append(col)
    return cols

def connected(m, edges):
    adj = collections.defaultdict(set)
    for u, v in edges:
        adj[u].add(v); adj[v].add(u)
    seen = {1}; stack = [1]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y); stack.append(y)
    return len(seen) == m

allpairs = [(u, v) for u in range(1, 7) for v in range(u + 1, 7)]
cands = []
for combo in itertools.combinations(allpairs, 7):
    if not connected(6, combo): continue
    cols = cut_columns(6, combo)
    if sorted(collections.Counter(sum(c) for c in cols).items()) != sorted(collections.Counter(sum(c) for c in fix_cols).items()):
        continue
    cands.append(combo)
print('weight-filtered candidates:', len(cands))

matches = []
for combo in cands:
    cols = cut_columns(6, combo)
    # search row (edge) permutation rho with {permuted columns} == fixture column set
    for rho in itertools.permutations(range(7)):
        perm_cols = sorted(tuple(c[rho[r]] for r in range(7)) for c in cols)
        if perm_cols == fix_colset_sorted:
            matches.append((combo, rho))
            break
print('full matches:', len(matches))
for combo, rho in matches[:6]:
    print(combo, 'row perm', rho)
