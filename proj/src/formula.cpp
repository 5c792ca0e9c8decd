#include "statelab/formula.hpp"

#include "statelab/error.hpp"

namespace statelab {

Formula Formula::atom(State q) {
  Formula f(Op::kAtom);
  f.state_ = q;
  return f;
}

namespace {

// Nested nodes of the same operator are spliced into their parent.
std::vector<Formula> flatten(std::vector<Formula> children, Formula::Op op) {
  bool nested = false;
  for (const auto& c : children) nested = nested || c.op() == op;
  if (!nested) return children;
  std::vector<Formula> flat;
  for (auto& c : children) {
    if (c.op() == op) {
      flat.insert(flat.end(), c.children().begin(), c.children().end());
    } else {
      flat.push_back(std::move(c));
    }
  }
  return flat;
}

}  // namespace

Formula Formula::all_of(std::vector<Formula> children) {
  if (children.empty()) throw InputError("conjunction needs at least one operand");
  if (children.size() == 1) return std::move(children.front());
  Formula f(Op::kAnd);
  f.children_ = flatten(std::move(children), Op::kAnd);
  return f;
}

Formula Formula::any_of(std::vector<Formula> children) {
  if (children.empty()) throw InputError("disjunction needs at least one operand");
  if (children.size() == 1) return std::move(children.front());
  Formula f(Op::kOr);
  f.children_ = flatten(std::move(children), Op::kOr);
  return f;
}

bool Formula::is_conjunctive() const noexcept {
  if (op_ == Op::kOr) return false;
  for (const auto& c : children_) {
    if (!c.is_conjunctive()) return false;
  }
  return true;
}

bool Formula::is_disjunctive() const noexcept {
  if (op_ == Op::kAnd) return false;
  for (const auto& c : children_) {
    if (!c.is_disjunctive()) return false;
  }
  return true;
}

void Formula::collect_atoms(std::vector<State>& out) const {
  if (op_ == Op::kAtom) {
    out.push_back(state_);
    return;
  }
  for (const auto& c : children_) c.collect_atoms(out);
}

bool eval_formula(const Formula& f, const TruthAssignment& truth) {
  // Check totality first so the result never depends on short-circuiting.
  std::vector<State> atoms;
  f.collect_atoms(atoms);
  for (const auto& q : atoms) {
    if (!truth.contains(q)) {
      throw InputError("no truth value assigned to atom (" + std::to_string(q.tag) + ", " +
                       std::to_string(q.v[0]) + ", " + std::to_string(q.v[1]) + ", " +
                       std::to_string(q.v[2]) + ")");
    }
  }
  return f.evaluate([&](const State& q) { return truth.at(q); });
}

namespace {

void format_into(const Formula& f, const std::function<std::string(const State&)>& label,
                 bool parenthesize_or, std::string& out) {
  switch (f.op()) {
    case Formula::Op::kTrue:
      out += 'T';
      return;
    case Formula::Op::kFalse:
      out += 'F';
      return;
    case Formula::Op::kAtom:
      out += label(f.state());
      return;
    case Formula::Op::kAnd: {
      bool first = true;
      for (const auto& c : f.children()) {
        if (!first) out += " & ";
        first = false;
        format_into(c, label, true, out);
      }
      return;
    }
    case Formula::Op::kOr: {
      if (parenthesize_or) out += '(';
      bool first = true;
      for (const auto& c : f.children()) {
        if (!first) out += " | ";
        first = false;
        format_into(c, label, false, out);
      }
      if (parenthesize_or) out += ')';
      return;
    }
  }
}

}  // namespace

std::string format_formula(const Formula& f, const std::function<std::string(const State&)>& label) {
  std::string out;
  format_into(f, label, false, out);
  return out;
}

}  // namespace statelab
