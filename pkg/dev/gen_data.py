import re
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

def emit(name, mat):
    print(f'{name} = (')
    for r in mat:
        print('    "' + ''.join(str(x) for x in r) + '",')
    print(')')
    print()

emit('_K23_ROWS', parse_matrix(grab(197, 207)))
emit('_FIG1_ROWS', parse_matrix(grab(325, 332)))
emit('_C7_A_ROWS', parse_matrix(grab(498, 504)))
emit('_C7_B_ROWS', parse_matrix(grab(512, 518)))
emit('_C7_C_ROWS', parse_matrix(grab(526, 532)))
