"""
Which tripartite graphs can be split into 5-cycles?
===================================================

Three counting conditions are necessary for K_{r,s,t} to decompose into
5-cycles.  The constructor handles a smaller, explicit region.  This script
walks through both checks on a few instances.
"""

from tripartite5 import Params, check_construction_domain, check_necessary

###############################################################################
# The necessary conditions hold for K_{5,5,5}: 75 edges, every degree even,
# and t(r+s) <= 4rs.

print(check_necessary(Params(5, 5, 5)).to_text())

###############################################################################
# K_{1,1,5} fails the density bound, since 5 * 2 > 4.  Its 11 edges are not
# a multiple of 5 either.

print(check_necessary(Params(1, 1, 5)).to_text())

###############################################################################
# The construction gate is stricter.  It wants odd parts, r < s, a gap of at
# least four between s and t, and some slack in the density bound.

for triple in [(25, 27, 33), (19, 21, 23), (25, 27, 35), (24, 26, 30)]:
    rep = check_construction_domain(Params(*triple))
    print(triple, rep.construction_supported, ",".join(rep.reasons) or "-")

###############################################################################
# The smallest supported t is 29.  Listing everything up to t = 41 shows how
# narrow the region is at this scale.

from tripartite5.sweep import supported_instances

print(supported_instances(41))
