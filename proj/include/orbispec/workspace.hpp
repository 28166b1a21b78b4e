#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbispec/explicit_set.hpp"
#include "orbispec/finite_group.hpp"
#include "orbispec/hodge.hpp"
#include "orbispec/macdonald.hpp"
#include "orbispec/orbifold.hpp"

namespace orbispec {

// Line-oriented workspace format. '#' starts a comment; blocks end with "end".
//
//   group mu2 cyclic 2
//   group one trivial
//   group w wreath mu2 2
//   group s3 table 6            (then 6 rows of 6 element indices)
//   end
//
//   hodge ell
//     row k=1 p=1 q=0 alpha=1/3 dim=1
//   end
//
//   explicit z2 points=2 group=mu2
//     phi 1 0
//     act 1 1 0                 (group element, then the image of every point)
//   end
//
//   brieskorn z3 a=3 order=3
//
//   node C group=mu2 dim=1
//     quotient 1*(0,1,1)
//     child class=0 beta=0 self
//     child class=1 beta=1/2 node=O
//   end
//
//   job verify theorem=2 fixture=z2 k=1 n-max=3
//
// Groups must be declared before use; nodes may refer to later nodes.

struct GroupDecl {
  enum class Kind { Trivial, Cyclic, Wreath, Table };
  std::string name;
  Kind kind = Kind::Trivial;
  std::size_t n = 0;  // cyclic order, wreath degree or table order
  std::string base;   // wreath base group
  std::vector<Elem> table;

  friend bool operator==(const GroupDecl&, const GroupDecl&) = default;
};

struct HodgeDecl {
  std::string name;
  std::vector<MixedHodgeEigenDatum> rows;

  friend bool operator==(const HodgeDecl&, const HodgeDecl&) = default;
};

struct ExplicitDecl {
  std::string name;
  std::size_t points = 0;
  std::string group;
  Permutation phi;
  std::vector<std::pair<Elem, Permutation>> generators;

  friend bool operator==(const ExplicitDecl&, const ExplicitDecl&) = default;
};

struct BrieskornDecl {
  std::string name;
  std::size_t a = 1;
  std::size_t order = 1;

  friend bool operator==(const BrieskornDecl&, const BrieskornDecl&) = default;
};

struct ChildDecl {
  std::size_t class_index = 0;
  Rational beta;
  bool self = false;
  std::string target;

  friend bool operator==(const ChildDecl&, const ChildDecl&) = default;
};

struct NodeDecl {
  std::string name;
  std::string group;
  std::optional<int> dim;  // nullopt: "mixed"
  EquivariantHD quotient{ehd_signature()};
  std::vector<ChildDecl> children;

  friend bool operator==(const NodeDecl&, const NodeDecl&) = default;
};

struct JobDecl {
  std::string command;  // spectrum | verify | expand | audit
  std::vector<std::pair<std::string, std::string>> options;

  const std::string* option(const std::string& key) const;
  friend bool operator==(const JobDecl&, const JobDecl&) = default;
};

/// A parsed and cross-checked workspace file.
class Workspace {
 public:
  /// Throws InputError with line and column on the first problem.
  static Workspace parse(std::string_view text);
  static Workspace load(const std::string& path);

  /// Canonical text; parse(serialize()) reproduces the declarations.
  std::string serialize() const;

  bool same_declarations(const Workspace& o) const;

  const std::vector<GroupDecl>& group_decls() const { return groups_; }
  const std::vector<HodgeDecl>& hodge_decls() const { return hodge_; }
  const std::vector<ExplicitDecl>& explicit_decls() const { return explicit_; }
  const std::vector<BrieskornDecl>& brieskorn_decls() const { return brieskorn_; }
  const std::vector<NodeDecl>& node_decls() const { return nodes_; }
  const std::vector<JobDecl>& jobs() const { return jobs_; }

  std::shared_ptr<const FiniteGroup> group(const std::string& name) const;
  const HodgeDecl* hodge(const std::string& name) const;
  /// Explicit and brieskorn declarations share this namespace.
  const ExplicitGSet* explicit_set(const std::string& name) const;
  std::optional<std::size_t> node(const std::string& name) const;
  std::shared_ptr<const TripleModel> model() const { return model_; }

  /// Explicit sets, brieskorn sets, then nodes, each in declaration order.
  std::vector<Theorem2Fixture> theorem2_fixtures() const;
  std::optional<Theorem2Fixture> theorem2_fixture(const std::string& name) const;

 private:
  std::vector<GroupDecl> groups_;
  std::vector<HodgeDecl> hodge_;
  std::vector<ExplicitDecl> explicit_;
  std::vector<BrieskornDecl> brieskorn_;
  std::vector<NodeDecl> nodes_;
  std::vector<JobDecl> jobs_;

  std::map<std::string, std::shared_ptr<const FiniteGroup>> built_groups_;
  std::map<std::string, ExplicitGSet> built_sets_;
  std::shared_ptr<TripleModel> model_ = std::make_shared<TripleModel>();
};

}  // namespace orbispec
