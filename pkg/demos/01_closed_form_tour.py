"""Tour of the closed-form relative entropy of entanglement.

Walks the rank-2 X family [[a,0,0,0],[0,b,sqrt(bc),0],[0,sqrt(bc),c,0],
[0,0,0,0]]: evaluates the closed form at landmark points, shows the
(M, N) weights and the discriminant, and traces the symmetric b = c
slice against its textbook expression.

Run:  python3 demos/01_closed_form_tour.py
"""


from wree import (
    XState,
    closed_form_parts,
    from_density,
    ree_closed_form,
    ree_vedral_plenio,
)

print("=" * 72)
print("closed form on landmark states (values in nats)")
print("=" * 72)

landmarks = [
    ("product |00><00|", XState(1.0, 0.0, 0.0)),
    ("Bell |Psi+><Psi+|", XState(0.0, 0.5, 0.5)),
    ("equal mix (1/3, 1/3, 1/3)", XState(1 / 3, 1 / 3, 1 / 3)),
    ("asymmetric (0.2, 0.5, 0.3)", XState(0.2, 0.5, 0.3)),
    ("diagonal (0.3, 0.7, 0)", XState(0.3, 0.7, 0.0)),
]
for label, state in landmarks:
    print(f"  {label:30s} E = {ree_closed_form(state):.12f}")

print()
print("interior points carry the (M, N) weights and the discriminant:")
for state in (XState(1 / 3, 1 / 3, 1 / 3), XState(0.2, 0.5, 0.3)):
    parts = closed_form_parts(state)
    print(
        f"  (a,b,c)=({state.a:.3f},{state.b:.3f},{state.c:.3f})  "
        f"M={parts.m_param:.6f}  N={parts.n_param:.6f}  "
        f"disc={parts.delta_disc:.6f}"
    )

print()
print("=" * 72)
print("symmetric slice b = c: closed form vs the direct expression")
print("=" * 72)
print(f"  {'lambda':>8s} {'closed form':>16s} {'formula':>16s} {'diff':>10s}")
for k in range(1, 10):
    lam = k / 10.0
    closed = ree_closed_form(XState(1.0 - lam, lam / 2.0, lam / 2.0))
    direct = ree_vedral_plenio(lam)
    print(f"  {lam:8.2f} {closed:16.12f} {direct:16.12f} {abs(closed - direct):10.1e}")

print()
print("pattern matching recovers (a, b, c) from a density matrix:")
state = XState(0.5, 0.3, 0.2)
recovered = from_density(state.to_density())
print(f"  round trip: ({recovered.a}, {recovered.b}, {recovered.c})")
