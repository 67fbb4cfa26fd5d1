# coding: utf-8

# # Mealy machines and the monoid they generate
#
# Each state q of a Mealy machine induces a letter-to-letter function on
# words. Closing these functions under composition gives a monoid that may
# be finite or not, and no algorithm can tell in general. The library keeps
# every function as a minimal transducer in canonical form, so equal
# functions are equal objects, and explores the monoid under a budget.

# In[1]:

from crispwta import BudgetExceeded, enumerate_trees, eval_init, eval_run, load_example
from crispwta.mealy import explore_monoid, format_seq, induced_map, monoid_ball, to_wta


# Swapping a and b twice does nothing, so the monoid has two elements.

# In[2]:

swap = load_example("swap.mealy")
[format_seq(f) for f in explore_monoid(swap, budget=10)]


# The binary odometer adds one to a number written least significant bit
# first. Adding k is a different function for every k, so the closure
# never finishes.

# In[3]:

adder = load_example("adder.mealy")
plus_one = induced_map(adder, "c")
print("".join(plus_one("1101")))
try:
    explore_monoid(adder, budget=50)
except BudgetExceeded as exc:
    print("more than 50 elements;", exc.explored, "seen")


# In[4]:

[len(monoid_ball(adder, d)) for d in range(8)]


# # The same monoid as a wta
#
# Turning the states of M into unary symbols gives a one-state,
# bu-deterministic wta whose weights are the induced functions. A chain of
# symbols evaluates to the composite function, so the distinct values over
# chains of length at most d are exactly the ball of radius d.

# In[5]:

A = to_wta(adder)
for d in range(5):
    values = {eval_init(A, t) for t in enumerate_trees(A.alphabet, d + 1)}
    print(d, len(values), values == monoid_ball(adder, d))


# Being bu-deterministic, it cannot tell the two semantics apart.

# In[6]:

all(eval_init(A, t) == eval_run(A, t) for t in enumerate_trees(A.alphabet, 5))
