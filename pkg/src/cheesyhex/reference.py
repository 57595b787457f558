"""Published reference values used as regression targets.

Nothing here feeds a computation except the cheesy growth constants for
levels 1 to 3, whose generating functions are not available to this
package; they are flagged ``EXTERNAL`` wherever they are reported.
"""

TABLE1 = {
    0: (1, 3, 11, 42, 162, 626, 2419, 9346, 36106, 139483, 538841, 2081612),
    1: (1, 3, 11, 44, 184, 784, 3363, 14451, 62097, 266716, 1145074, 4914448),
    2: (1, 3, 11, 44, 186, 810, 3582, 15952, 71242, 318441, 1423411, 6360809),
    3: (1, 3, 11, 44, 186, 812, 3614, 16259, 73558, 333683, 1515454, 6885303),
}

BLOCKS_GROWTH = {0: 3.863131, 1: 4.289698, 2: 4.462811, 3: 4.538766}
BLOCKS_AMPLITUDE = {1: 0.126651, 2: 0.102214, 3: 0.090504}

# level 0 coincides with the blocks class (both are column-convex)
CHEESY_GROWTH = {0: 3.863131, 1: 4.114908, 2: 4.231836, 3: 4.288631}
EXTERNAL = "external input"

LEVEL1_ROOTS = (
    complex(-6.109867, 0),
    complex(0.233117, 0),
    complex(0.449922, 0.087757),
    complex(0.449922, -0.087757),
    complex(0.988454, 1.537589),
    complex(0.988454, -1.537589),
)

EXTRAPOLATED_BLOCKS = 4.590
EXTRAPOLATED_CHEESY = 4.346
