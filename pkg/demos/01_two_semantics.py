# coding: utf-8

# # Two ways to weigh a tree
#
# A weighted tree automaton can assign a tree its weight in two ways. The
# initial algebra semantics folds the tree bottom-up into a vector of state
# weights. The run semantics sums the weight of every labelling of the tree
# with states. Over a semiring both agree. Over a mere strong bimonoid they
# can drift apart, and this notebook shows by how much.

# In[1]:

from crispwta import eval_init, eval_run, eval_vector, load_example, parse_tree
from crispwta import export_hypergraph, is_bu_deterministic


# The automaton below lives over (N + inf, +, min, 0, inf): addition sums,
# min multiplies. It has two states and every weight is 1.

# In[2]:

A = load_example("example3_1.wta")
A, A.bimonoid.name, is_bu_deterministic(A)


# On the chain gamma(...gamma(alpha)) the vector semantics settles at 2,
# while the run semantics counts 2^(n+1) runs of weight 1 each.

# In[3]:

for n in range(6):
    t = parse_tree(f"gamma^{n}(alpha)")
    print(n, eval_vector(A, t), eval_init(A, t), eval_run(A, t))


# # Counting positions with runs
#
# Over the tropical semiring a single state with weight 1 on every
# transition makes every run weigh |pos(t)|. The root weight 0 keeps it.

# In[4]:

C = load_example("size.wta")
for text in ["alpha", "gamma(alpha)", "sigma(alpha,gamma(alpha))", "sigma(gamma^3(alpha),alpha)"]:
    t = parse_tree(text)
    print(f"{text:32} size {t.size}  run {eval_run(C, t)}")


# Run weights are computed from exact run counts, so large trees are cheap
# even though the number of runs grows like |Q|^|pos|.

# In[5]:

big = parse_tree("gamma^200(alpha)")
eval_run(A, big) == 2 ** 201


# # The functional hypergraph
#
# States become circles labelled with their root weight, transitions become
# boxes, and numbered arcs feed children into boxes. The output is DOT text.

# In[6]:

print(export_hypergraph(load_example("sizemod2.wta")))
