"""
Writing your own vertex and hyperedge programs
==============================================

Programs are plain functions ``(step, id, attr, msg, ctx)`` plus a combiner
for the messages they emit.  Here every hyperedge learns the smallest and
largest member id, and vertices learn how many co-members they have in total.
"""

from hyperps import Program, build, compute, partition
from hyperps.combiners import add, componentwise, maximum, minimum

h = build([[1, 2], [1, 2, 3, 4], [1, 4, 5], [3, 4]])


def vertex(step, v, attr, msg, ctx):
    if step == 0:
        # (min id, max id) pairs are merged slot by slot at the hyperedge
        ctx.broadcast((v, v))
    else:
        ctx.become(msg)


def hyperedge(step, e, attr, msg, ctx):
    lo, hi = msg
    ctx.become({"min": lo, "max": hi})
    # per-recipient message: each member hears about the other members
    size = len(h.members(e))
    ctx.send(lambda v: size - 1)


out, report = compute(
    h,
    partition(h, "rbc", 3),
    max_iters=2,
    initial_msg=None,
    v_program=Program(vertex, componentwise(minimum, maximum)),
    he_program=Program(hyperedge, add),
    debug=True,  # check that every mirror matches its master after each phase
)
print(dict(out.hyperedge_attrs))
print(dict(out.vertices))
for p in report.phases:
    print(p)
