#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "liestruct/poly.hpp"
#include "liestruct/rational.hpp"

namespace liestruct {

struct ExprError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic expressions over named parameters, used by the catalog and
// table data files: integers, rationals "p/q", identifiers, + - * / ^ and
// parentheses. Two evaluation modes: all parameters bound (-> Rat), or some
// parameters kept as polynomial unknowns (-> Poly; division restricted to
// constant divisors).
class Expr {
 public:
  static Expr parse(const std::string& text);

  Rat eval(const std::map<std::string, Rat>& env) const;

  // env binds some names to constants; `vars` maps the remaining names to
  // polynomial variable indices in [0, nvars).
  Poly to_poly(const std::map<std::string, Rat>& env, const std::map<std::string, int>& vars,
               int nvars) const;

  const std::string& text() const { return text_; }
  std::vector<std::string> free_names() const;

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    enum Kind { kConst, kVar, kAdd, kSub, kMul, kDiv, kNeg, kPow } kind;
    Rat value;          // kConst
    std::string name;   // kVar
    int exponent = 0;   // kPow
    NodePtr a, b;
  };

  std::string text_;
  NodePtr root_;

  static Rat eval_node(const NodePtr& n, const std::map<std::string, Rat>& env);
  static Poly poly_node(const NodePtr& n, const std::map<std::string, Rat>& env,
                        const std::map<std::string, int>& vars, int nvars);
  static void collect_names(const NodePtr& n, std::vector<std::string>& out);
};

}  // namespace liestruct
