#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rephom/groupschemes/group_scheme.hpp"
#include "rephom/groupschemes/models.hpp"
#include "rephom/groupschemes/words.hpp"
#include "rephom/lie/current_lie.hpp"
#include "rephom/lie/free_lie.hpp"
#include "rephom/simplicial/simplicial_set.hpp"

namespace rephom::cli {

enum class SpaceKind { Sphere, Wedge, Suspension, Plus, CP, Surface, Torus, Link, KPi1, BZp, Simplicial };

// Finitely presented group: generator names and relator words.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<groupschemes::GroupWord> relators;
};

// A space from the catalog, read from JSON such as
//   {"kind":"sphere","n":2}            {"kind":"cp","r":2}
//   {"kind":"wedge","of":[...]}        {"kind":"suspension","of":{...}}
//   {"kind":"plus","of":{...}}         {"kind":"torus"}
//   {"kind":"surface","genus":2,"orientable":true}
//   {"kind":"link","strands":2,"braid":[1,1,1]}
//   {"kind":"kpi1","generators":["a","b"],"relators":["[a,b]"]}
//   {"kind":"bzp","p":3}               {"kind":"simplicial","cells":[...]}
struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::Sphere;
  int n = 0;  // sphere dimension, r of CP^r, genus, or p
  bool orientable = true;
  groupschemes::BraidWord braid;
  GroupPresentation presentation;
  std::vector<SpaceDescriptor> parts;
  std::string cells_json;

  // Accepts inline JSON text or a path to a JSON file.
  static SpaceDescriptor load(const std::string& text_or_path);
  static SpaceDescriptor from_json_text(const std::string& text);

  std::string kind_name() const;
  std::string label() const;

  bool connected() const;
  bool simply_connected() const;
  // Reduced rational Betti numbers by degree, when known.
  std::optional<std::map<int, int>> reduced_betti() const;
  // Dimensions of a wedge of spheres rationally equivalent to the space
  // (spheres, wedges and suspensions are co-H-spaces).
  std::optional<std::vector<int>> sphere_dims() const;
  // Free graded Lie model with its bracket basis through `cutoff`.
  lie::FreeGradedLie quillen_model(int cutoff) const;
  // Reduced (or unital) finite-dimensional cohomology algebra, when the
  // space is formal with a known one.
  std::optional<lie::CoefficientAlgebra> sullivan_algebra(bool with_unit) const;
  // Simplicial set; levels bounds the nerve of Z/p.
  std::optional<simplicial::FiniteSimplicialSet> simplicial_set(int levels) const;
  GroupPresentation fundamental_group() const;
  std::optional<groupschemes::DGModel> koszul_model(const groupschemes::GroupSchemeData& g) const;
};

}  // namespace rephom::cli
