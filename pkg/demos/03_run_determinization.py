# coding: utf-8

# # Determinizing the run semantics
#
# The run semantics cannot be folded into vectors when the bimonoid is not
# distributive. What can be folded is the profile of a tree: how many runs
# end in state q with weight b. If the transition weights generate a finite
# multiplicative monoid H and every weight has a finite additive index and
# period, those counts can be cut down to residues, and the residue tables
# become states.

# In[1]:

from crispwta import (build_run_det, check_finite_order_property, enumerate_trees, eval_run,
                      load_example, parse_tree, pi_of_tree, run_profile)


# In[2]:

E = load_example("exampleE.wta")
od = check_finite_order_property(E)
sorted(od.H), od.index, od.period


# Run counts for a few small trees, next to their residues. Here index and
# period are both 1, so every nonzero count collapses to 1.

# In[3]:

for text in ["alpha", "gamma(alpha)", "sigma(alpha,alpha)", "sigma(gamma(alpha),gamma(alpha))"]:
    t = parse_tree(text)
    print(f"{text:34}", dict(sorted(run_profile(E, t).items(), key=str)))
    print(" " * 34, pi_of_tree(E, od, t).describe(E))


# The residue tables reachable from the leaves form the new automaton.

# In[4]:

res = build_run_det(E, od, max_states=100)
for pi in res.pistates:
    print(res.names[pi], "final", res.wta.final_weight(res.names[pi]), "witness", res.witnesses[pi])


# In[5]:

all(eval_run(res.wta, t) == eval_run(E, t) for t in enumerate_trees(E.alphabet, 9))


# # Where it stops
#
# Counting with + over the naturals never cycles: 1, 1+1, 1+1+1, ... are all
# different. The order check says so instead of looping.

# In[6]:

from crispwta import NotEstablished

try:
    check_finite_order_property(load_example("example3_1.wta"))
except NotEstablished as exc:
    print(exc.stage, "-", exc)
