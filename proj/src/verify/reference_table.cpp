#include "spectree/checks.hpp"

namespace spectree {

// Printed a(X) and a(beta_2..beta_7) with the drawn trees as 1-based edge lists.
const std::vector<ReferenceRow>& reference_table() {
    static const std::vector<ReferenceRow> rows = {
        {"chair", 5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}}, 0.519, {0.43, 1.72, 2.82, 3.87, 4.89, 5.91}},

        {"T(2,1,2)", 6, {{6, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}}, 0.325, {0.224, 1.037, 1.556, 2.075, 2.59, 3.112}},
        {"n6-spider", 6, {{1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 6}}, 0.381, {0.381, 1.39, 2.09, 2.78, 3.486, 4.18}},
        {"T(1,3,1)", 6, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {3, 6}}, 0.486, {0.627, 1.824, 2.88, 3.91, 4.93, 5.94}},
        {"T(1,2,2)", 6, {{1, 5}, {1, 6}, {1, 2}, {2, 3}, {2, 4}}, 0.438, {1, 2, 3, 4, 5, 6}},

        {"T(3,1,2)", 7, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {6, 1}, {6, 7}}, 0.225, {0.13, 0.649, 0.974, 1.299, 1.62, 1.944}},
        {"n7-b", 7, {{1, 4}, {2, 3}, {3, 4}, {3, 5}, {5, 6}, {6, 7}}, 0.260, {0.220, 0.826, 1.23, 1.652, 2.065, 2.478}},
        {"n7-c", 7, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {3, 6}, {1, 7}}, 0.296, {0.28, 0.9717, 1.45, 1.943, 2.42, 2.91}},
        {"n7-d", 7, {{1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 6}, {1, 7}}, 0.381, {0.381, 1.39, 2.09, 2.075, 2.59, 3.112},
         true, "printed values repeat other rows; not asserted"},
        {"T(2,2,2)", 7, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {1, 6}, {1, 7}}, 0.267, {0.43, 0.876, 1.31, 1.72, 2.15, 2.58}},
        {"n7-f", 7, {{1, 6}, {1, 2}, {2, 3}, {4, 2}, {5, 7}, {1, 7}}, 0.322, {0.45, 1.26, 1.89, 2.52, 2.95, 3.38}},
        {"n7-g", 7, {{1, 4}, {2, 3}, {3, 4}, {3, 5}, {5, 6}, {3, 7}}, 0.381, {0.581, 1.52, 2.29, 3.055, 3.81, 4.58}},
        {"T(1,4,1)", 7, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {3, 6}, {3, 7}}, 0.466, {0.72, 1.86, 2.91, 3.93, 4.94, 5.95}},
        {"T(1,2,3)", 7, {{1, 5}, {1, 6}, {1, 2}, {2, 3}, {4, 2}, {2, 7}}, 0.398, {1, 2, 3, 4, 5, 6}},
    };
    return rows;
}

}  // namespace spectree
