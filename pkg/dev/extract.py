"""One-off extraction of numeric data from paper.md into Python literals."""
import re

text = open('/root/pkg/paper.md').read()
lines = text.split('\n')

def grab(start, end):
    return '\n'.join(lines[start-1:end])

# --- K23 matrix: lines 197-206 (rows with & separators, \hline noise) ---
def parse_matrix(block):
    rows = []
    for ln in block.split('\n'):
        ln = ln.strip()
        if not ln or 'hline' in ln or 'begin' in ln or 'end' in ln:
            continue
        ln = ln.replace('\\\\', ' ').replace('&', ' ')
        nums = re.findall(r'\d+', ln)
        if nums:
            rows.append([int(x) for x in nums])
    return rows

k23 = parse_matrix(grab(197, 207))
print('K23:', len(k23), 'x', set(len(r) for r in k23))

fig1 = parse_matrix(grab(325, 332))
print('fig1:', len(fig1), 'x', set(len(r) for r in fig1))

A = parse_matrix(grab(498, 504))
print('A:', len(A), 'x', set(len(r) for r in A))

B = parse_matrix(grab(512, 518))
print('B:', len(B), 'x', set(len(r) for r in B))

C = parse_matrix(grab(526, 532))
print('C:', len(C), 'x', set(len(r) for r in C))

# --- weight vector w (lines 340-342) ---
wtxt = grab(340, 342)
wtxt = wtxt[wtxt.index('('):wtxt.rindex(')')]
w = [int(x) for x in re.findall(r'\d+', wtxt)]
print('w:', len(w), w)

# --- lex sequences ---
def parse_seq(block, var):
    return [int(x) for x in re.findall(var + r'_\{(\d+)\}', block)]

lex1_B = parse_seq(grab(551, 553), 'y')
print('lex1_B:', len(lex1_B), lex1_B)

lexA_seg = parse_seq(grab(557, 559), 'x')
print('lexA_seg:', len(lexA_seg), lexA_seg)

lex_c7 = parse_seq(grab(565, 568), 'x')
print('lex_c7:', len(lex_c7), lex_c7)

# --- golden basis list (lines 344-373) ---
gold = grab(344, 373)
gold = gold.replace('\\\\', '').replace('\n', '').replace(' ', '')
gold = gold.strip()
assert gold.startswith('$\\{') and gold.endswith('\\}$'), gold[:20] + ' ... ' + gold[-20:]
gold = gold[3:-3]
# elements separated by commas at top level; each is signed terms of x_{i}x_{j}
elems = gold.split(',')
print('golden elements:', len(elems))
parsed = []
for e in elems:
    # tokens: sign x_{a}x_{b}
    terms = re.findall(r'([+-]?)x_\{(\d+)\}x_\{(\d+)\}', e)
    assert len(terms) == 2, (e, terms)
    parsed.append(terms)
# re-emit as plain text faithful to printed signs/order
out = []
for t in parsed:
    s = ''
    for sign, a, b in t:
        s += (sign if sign else '+') + 'x%s*x%s' % (a, b)
    out.append(s)
print('GOLDEN = (')
for i in range(0, len(out), 4):
    print('    "' + ' '.join(out[i:i+4]) + '"')
print(')')

# f1..f8 cubics (lines 242-249)
f = grab(242, 249)
cub = re.findall(r'f_(\d) &=& x_\{(\d+)\} x_\{(\d+)\} x_\{(\d+)\} &- & x_\{(\d+)\} x_\{(\d+)\} x_\{(\d+)\}', f)
print('cubics:', cub)
