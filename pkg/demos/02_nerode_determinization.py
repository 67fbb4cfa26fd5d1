# coding: utf-8

# # Crisp determinization through the Nerode algebra
#
# For the initial semantics every wta A defines a map h from trees to
# vectors in B^Q. The distinct vectors that actually occur are the states of
# an equivalent crisp-deterministic automaton, as long as there are finitely
# many of them. `build_nerode` finds them by a breadth-first closure.

# In[1]:

from crispwta import (BudgetExceeded, build_nerode, enumerate_trees, eval_init, first_difference,
                      isomorphic, load_example, to_algebra, write_wta)


# A three-state tropical wta whose vectors only ever take two values.

# In[2]:

D = load_example("exampleD.wta")
res = build_nerode(D, max_states=10)
for v in res.vectors:
    print(res.names[v], v, "witness:", res.witnesses[v])


# The result is written in the same text format it was read from.

# In[3]:

print(write_wta(res.wta))


# It is the size-parity automaton in disguise.

# In[4]:

isomorphic(to_algebra(res.wta), to_algebra(load_example("sizemod2.wta")))


# In[5]:

first_difference(res.wta, D, max_size=9) is None


# # When the vectors never repeat
#
# Giving the size-counting automaton the root weight inf makes every tree
# weigh inf, yet the vectors [n] are all different. The closure has no end,
# so the construction runs out of budget instead.

# In[6]:

F = load_example("size_Finf.wta")
print({eval_init(F, t) for t in enumerate_trees(F.alphabet, 7)})
try:
    build_nerode(F, max_states=1000)
except BudgetExceeded as exc:
    print("gave up after", exc.explored, "vectors")
