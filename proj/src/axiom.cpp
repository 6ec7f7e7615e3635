#include "transfun/axiom.hpp"

#include <cmath>
#include <utility>

#include "transfun/error.hpp"

namespace transfun {

namespace {

constexpr std::array<std::pair<Axiom, std::string_view>, 7> kAxiomNames{{
    {Axiom::weakly_additive, "weakly_additive"},
    {Axiom::strongly_additive, "strongly_additive"},
    {Axiom::homogeneous, "homogeneous"},
    {Axiom::monotone, "monotone"},
    {Axiom::measure_preserving, "measure_preserving"},
    {Axiom::bounded, "bounded"},
    {Axiom::continuous, "continuous"},
}};

constexpr std::array<std::pair<Status, std::string_view>, 4> kStatusNames{{
    {Status::proved, "proved"},
    {Status::refuted, "refuted_with_witness"},
    {Status::passed_trials, "passed_trials"},
    {Status::unknown, "unknown"},
}};

constexpr std::array<std::pair<Source, std::string_view>, 3> kSourceNames{{
    {Source::static_rules, "static"},
    {Source::trials, "trials"},
    {Source::static_and_trials, "static+trials"},
}};

template <class E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E e) {
  for (const auto& [k, n] : table)
    if (k == e) return n;
  return "?";
}

template <class E, std::size_t N>
std::optional<E> parse_name(const std::array<std::pair<E, std::string_view>, N>& table,
                            std::string_view name) {
  for (const auto& [k, n] : table)
    if (n == name) return k;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Axiom axiom) { return name_of(kAxiomNames, axiom); }
std::optional<Axiom> axiom_from_string(std::string_view name) {
  return parse_name(kAxiomNames, name);
}
std::string_view to_string(Status status) { return name_of(kStatusNames, status); }
std::optional<Status> status_from_string(std::string_view name) {
  return parse_name(kStatusNames, name);
}
std::string_view to_string(Source source) { return name_of(kSourceNames, source); }
std::optional<Source> source_from_string(std::string_view name) {
  return parse_name(kSourceNames, name);
}

void CheckConfig::validate() const {
  if (trials == 0) fail(Errc::invalid_config, "trials must be positive");
  if (!(tolerance > 0.0) || !std::isfinite(tolerance))
    fail(Errc::invalid_config, "tolerance must be positive and finite");
  if (!(max_mass > 0.0) || !std::isfinite(max_mass))
    fail(Errc::invalid_config, "max_mass must be positive and finite");
  if (sequence_length == 0) fail(Errc::invalid_config, "sequence_length must be positive");
}

const Verdict* PropertyReport::find(Axiom axiom) const {
  for (const auto& v : verdicts)
    if (v.axiom == axiom) return &v;
  return nullptr;
}

}  // namespace transfun
