#include "transfun/space.hpp"

#include <unordered_map>

#include "transfun/error.hpp"

namespace transfun {

struct Space::Impl {
  std::string id;
  std::vector<std::string> atoms;
  std::unordered_map<std::string, std::size_t> index;
};

Space::Space(std::string id, std::vector<std::string> atoms) {
  if (atoms.empty()) fail(Errc::invalid_space, "space '" + id + "' has no atoms");
  auto impl = std::make_shared<Impl>();
  impl->index.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!impl->index.emplace(atoms[i], i).second)
      fail(Errc::invalid_space, "space '" + id + "' repeats atom '" + atoms[i] + "'");
  }
  impl->id = std::move(id);
  impl->atoms = std::move(atoms);
  impl_ = std::move(impl);
}

const std::string& Space::id() const noexcept { return impl_->id; }
std::size_t Space::size() const noexcept { return impl_->atoms.size(); }
std::span<const std::string> Space::atoms() const noexcept { return impl_->atoms; }

const std::string& Space::label(std::size_t index) const { return impl_->atoms.at(index); }

std::optional<std::size_t> Space::find(std::string_view label) const {
  auto it = impl_->index.find(std::string(label));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Space::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  fail(Errc::unknown_atom,
       "atom '" + std::string(label) + "' is not in space '" + id() + "'");
}

bool operator==(const Space& a, const Space& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->id == b.impl_->id && a.impl_->atoms == b.impl_->atoms;
}

void require_same_space(const Space& a, const Space& b, std::string_view what) {
  if (!(a == b)) {
    fail(Errc::space_mismatch, std::string(what) + ": space '" + a.id() +
                                   "' does not match space '" + b.id() + "'");
  }
}

namespace {

void append_escaped(std::string& out, std::string_view s) {
  for (char c : s) {
    if (c == ',' || c == '(' || c == ')' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
}

std::vector<std::string> product_labels(const Space& left, const Space& right) {
  std::vector<std::string> labels;
  labels.reserve(left.size() * right.size());
  for (const auto& l : left.atoms())
    for (const auto& r : right.atoms()) labels.push_back(pair_label(l, r));
  return labels;
}

}  // namespace

std::string pair_label(std::string_view left, std::string_view right) {
  std::string out = "(";
  append_escaped(out, left);
  out.push_back(',');
  append_escaped(out, right);
  out.push_back(')');
  return out;
}

ProductSpace::ProductSpace(Space left, Space right)
    : left_(left),
      right_(right),
      flat_(left.id() + "*" + right.id(), product_labels(left, right)) {}

std::pair<std::string, std::string> ProductSpace::decode(std::string_view label) const {
  auto [i, j] = pair_of(flat_.index_of(label));
  return {left_.label(i), right_.label(j)};
}

}  // namespace transfun
