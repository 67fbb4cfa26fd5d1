# coding: utf-8

# # Crisp automata as step mappings
#
# A crisp-deterministic wta sends each tree to exactly one state, so it
# splits all trees into finitely many languages and gives each its own
# constant weight. Going back, any finite list of (weight, language) pairs
# can be turned into a crisp automaton by running all acceptors in parallel.

# In[1]:

from crispwta import crisp_to_step, enumerate_trees, eval_init, load_example, step_eval, step_to_crisp
from crispwta.stepmap import accepts, is_normal_form


# In[2]:

A = load_example("sizemod2.wta")
s = crisp_to_step(A)
[(b, L.final) for b, L in s.steps], is_normal_form(s)


# Each tree is accepted by exactly one step.

# In[3]:

for t in list(enumerate_trees(A.alphabet, 4)):
    print(f"{str(t):24}", [accepts(L, t) for _, L in s.steps], step_eval(s, t))


# The same mapping ships as a text file pointing at two Boolean acceptors.

# In[4]:

shipped = load_example("sizemod2.step")
C = step_to_crisp(shipped)
C.states, all(eval_init(C, t) == eval_init(A, t) for t in enumerate_trees(A.alphabet, 8))
