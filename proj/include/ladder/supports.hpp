#pragma once

#include <optional>
#include <vector>

#include "ladder/ladder.hpp"

namespace ladder {

// Row/column index sets of one t x t minor whose cells all lie in the ladder.
struct MinorSupport {
  std::vector<int> rows, cols;
  friend auto operator<=>(const MinorSupport&, const MinorSupport&) = default;
};

// All t-minor supports in lexicographic (rows, cols) order. Uses per-row
// interval intersection, which is valid because comparable cells of a ladder
// span full rectangles (asserted per path component).
std::vector<MinorSupport> minor_supports(const Ladder& Y, int t,
                                         std::optional<std::size_t> cap = std::nullopt);

// Reference enumeration that tests every cell of every candidate support.
std::vector<MinorSupport> minor_supports_reference(const Ladder& Y, int t,
                                                   std::optional<std::size_t> cap = std::nullopt);

struct Component {
  Ladder ladder;
  bool free_point = false;  // belongs to no t-minor support
};

// Finest split of the ladder into sub-ladders such that every t-minor support
// lies inside one part; points in no support become singleton free parts.
std::vector<Component> t_components(const Ladder& Y, int t);

bool is_t_connected(const Ladder& Y, int t);

}  // namespace ladder
