#pragma once

#include <optional>
#include <string>

#include "rephom/cli/descriptor.hpp"
#include "rephom/cli/run.hpp"
#include "rephom/exactlin/chain.hpp"
#include "rephom/groebner/buchberger.hpp"

namespace rephom::cli {

// JSON text or file contents.
std::string load_text(const std::string& text_or_path);

// A presentation {"generators":[..],"relators":[..]}, or a space descriptor
// standing for its fundamental group.
GroupPresentation load_presentation(const std::string& text_or_path);

struct Rep0Outcome {
  Rep0Block block;
  // Set when a comparison was requested and could be decided.
  std::optional<bool> equal;
  bool exhausted = false;
  int exit_code() const;
  std::string to_text() const;
  std::string to_json() const;
};

// Ideal of Rep_G(pi). With `other`, compares against a second presentation
// or, for a surface, torus or link descriptor, against the degree-0 ideal
// of its model.
Rep0Outcome rep0_command(const std::string& presentation, const GroupRef& group,
                         const std::optional<std::string>& other);

// Higher Hochschild homology of a polynomial coefficient ring along the
// simplicial set of `space`. Algebra JSON: {"kind":"polynomial","variables":d}
// or {"group":"Ga:2"} for a coordinate ring.
BettiTable hh_command(const SpaceDescriptor& space, const std::string& algebra, int max_degree, int max_weight);

}  // namespace rephom::cli
