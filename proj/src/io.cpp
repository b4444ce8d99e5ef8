#include "matdecomp/io.hpp"

#include <initializer_list>
#include <string_view>

namespace matdecomp::io {

namespace {

void only_keys(const json& j, std::initializer_list<std::string_view> allowed, std::string_view what) {
  if (!j.is_object()) fail(ErrorCode::Parse, std::string(what) + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (auto a : allowed) ok = ok || it.key() == a;
    if (!ok) fail(ErrorCode::Parse, "unknown key '" + it.key() + "' in " + std::string(what));
  }
}

const json& need(const json& j, const char* key, std::string_view what) {
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorCode::Parse, std::string(what) + " lacks '" + key + "'");
  return *it;
}

std::string need_string(const json& j, const char* key, std::string_view what) {
  const json& v = need(j, key, what);
  if (!v.is_string()) fail(ErrorCode::Parse, std::string(what) + "." + key + " must be a string");
  return v.get<std::string>();
}

FieldValue scalar(const Field& f, const json& j) {
  if (j.is_string()) return f.parse(j.get<std::string>());
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  fail(ErrorCode::Parse, "scalar must be a string or an integer");
}

json mats_to_json(const std::vector<Mat3>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(to_json(m));
  return a;
}

std::vector<Mat3> mats_from_json(const Field& f, const json& j, std::string_view what) {
  if (!j.is_array()) fail(ErrorCode::Parse, std::string(what) + " must be a list of matrices");
  std::vector<Mat3> out;
  for (const auto& m : j) out.push_back(mat_from_json(f, m));
  return out;
}

template <class F>
auto guarded(F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, e.what());
  }
}

json histogram(const std::map<CanonLabel, std::uint64_t>& h) {
  json o = json::object();
  for (auto [l, c] : h) o[std::string(to_string(l))] = c;
  return o;
}

}  // namespace

json to_json(const Field& f) {
  switch (f.kind()) {
    case FieldKind::rational: return {{"kind", "rational"}};
    case FieldKind::prime: return {{"kind", "prime"}, {"p", f.characteristic()}};
    case FieldKind::quadratic:
      return {{"kind", "quadratic"}, {"base", to_json(f.base())}, {"d", f.radicand().to_string()}};
  }
  fail(ErrorCode::Internal, "unknown field kind");
}

Field field_from_json(const json& j) {
  return guarded([&] {
    const std::string kind = need_string(j, "kind", "field");
    if (kind == "rational") {
      only_keys(j, {"kind"}, "field");
      return Field::rational();
    }
    if (kind == "prime") {
      only_keys(j, {"kind", "p"}, "field");
      const json& p = need(j, "p", "field");
      if (!p.is_number_integer()) fail(ErrorCode::Parse, "field.p must be an integer");
      return Field::prime(p.get<std::int64_t>());
    }
    if (kind == "quadratic") {
      only_keys(j, {"kind", "base", "d"}, "field");
      const Field base = field_from_json(need(j, "base", "field"));
      return Field::quadratic(base, scalar(base, need(j, "d", "field")));
    }
    fail(ErrorCode::Parse, "unknown field kind '" + kind + "'");
  });
}

json to_json(const Mat3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int k = 0; k < 3; ++k) row.push_back(m(i, k).to_string());
    rows.push_back(row);
  }
  return rows;
}

Mat3 mat_from_json(const Field& f, const json& j) {
  if (!j.is_array() || j.size() != 3) fail(ErrorCode::Parse, "matrix must have three rows");
  Mat3 m(f);
  for (int i = 0; i < 3; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 3) fail(ErrorCode::Parse, "matrix rows must have three entries");
    for (int k = 0; k < 3; ++k) m.set(i, k, scalar(f, row[static_cast<std::size_t>(k)]));
  }
  return m;
}

json to_json(const Decomposition& d) {
  json j{{"schema", kSchema}, {"field", to_json(d.field())}, {"S", mats_to_json(d.S().basis())}};
  if (auto m = identify_standard_m(d.M()))
    j["M"] = std::string(to_string(*m));
  else
    j["M"] = mats_to_json(d.M().basis());
  if (d.label_hint()) j["label"] = std::string(to_string(*d.label_hint()));
  return j;
}

std::pair<Subalgebra, Subalgebra> halves_from_json(const json& j) {
  return guarded([&] {
    only_keys(j, {"schema", "field", "S", "M", "label"}, "decomposition");
    if (auto s = j.find("schema"); s != j.end() && *s != kSchema)
      fail(ErrorCode::Parse, "unsupported schema " + s->dump());
    const Field f = j.contains("field") ? field_from_json(j["field"]) : Field::rational();
    Subalgebra s = Subalgebra::make(f, mats_from_json(f, need(j, "S", "decomposition"), "S"));
    const json& mj = need(j, "M", "decomposition");
    if (mj.is_string()) {
      auto which = parse_standard_m(mj.get<std::string>());
      if (!which) fail(ErrorCode::Parse, "unknown M name " + mj.dump());
      return std::pair{std::move(s), standard_m(*which, f)};
    }
    return std::pair{std::move(s), Subalgebra::make(f, mats_from_json(f, mj, "M"))};
  });
}

Decomposition decomposition_from_json(const json& j) {
  auto [s, m] = halves_from_json(j);
  std::optional<CanonLabel> hint;
  if (auto l = j.find("label"); l != j.end()) {
    if (!l->is_string() || !(hint = parse_label(l->get<std::string>())))
      fail(ErrorCode::Parse, "unknown label " + l->dump());
  }
  return Decomposition::validate(std::move(s), std::move(m), hint);
}

json to_json(const AutoSpec& a) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Conjugation>) {
          return {{"type", "conjugation"}, {"T", to_json(v.T)}};
        } else if constexpr (std::is_same_v<T, Transpose>) {
          return {{"type", "transpose"}};
        } else if constexpr (std::is_same_v<T, ThetaSwap>) {
          return {{"type", "theta"}, {"i", v.i}, {"j", v.j}};
        } else if constexpr (std::is_same_v<T, FamilyM6>) {
          return {{"type", "family_m6"},        {"beta", v.beta.to_string()},     {"gamma", v.gamma.to_string()},
                  {"kappa", v.kappa.to_string()}, {"lambda", v.lambda.to_string()}, {"mu", v.mu.to_string()},
                  {"nu", v.nu.to_string()}};
        } else if constexpr (std::is_same_v<T, FamilyU>) {
          return {{"type", "family_u"},          {"alpha", v.alpha.to_string()}, {"beta", v.beta.to_string()},
                  {"gamma", v.gamma.to_string()}, {"delta", v.delta.to_string()}, {"epsilon", v.epsilon.to_string()}};
        } else if constexpr (std::is_same_v<T, Inverse>) {
          return {{"type", "inverse"}, {"of", to_json(*v.of)}};
        } else {
          json parts = json::array();
          for (const auto& p : v.parts) parts.push_back(to_json(p));
          return parts;
        }
      },
      a.variant());
}

AutoSpec autospec_from_json(const Field& f, const json& j) {
  return guarded([&] {
    if (j.is_array()) {
      std::vector<AutoSpec> parts;
      for (const auto& p : j) parts.push_back(autospec_from_json(f, p));
      return AutoSpec::composite(std::move(parts));
    }
    const std::string type = need_string(j, "type", "transform");
    auto s = [&](const char* k) { return scalar(f, need(j, k, "transform")); };
    if (type == "conjugation") {
      only_keys(j, {"type", "T"}, "conjugation");
      return AutoSpec::conjugation(mat_from_json(f, need(j, "T", "conjugation")));
    }
    if (type == "transpose") {
      only_keys(j, {"type"}, "transpose");
      return AutoSpec::transpose();
    }
    if (type == "theta") {
      only_keys(j, {"type", "i", "j"}, "theta");
      return AutoSpec::theta(need(j, "i", "theta").get<int>(), need(j, "j", "theta").get<int>());
    }
    if (type == "family_m6") {
      only_keys(j, {"type", "beta", "gamma", "kappa", "lambda", "mu", "nu"}, "family_m6");
      return AutoSpec::family_m6({s("beta"), s("gamma"), s("kappa"), s("lambda"), s("mu"), s("nu")});
    }
    if (type == "family_u") {
      only_keys(j, {"type", "alpha", "beta", "gamma", "delta", "epsilon"}, "family_u");
      return AutoSpec::family_u({s("alpha"), s("beta"), s("gamma"), s("delta"), s("epsilon")});
    }
    if (type == "inverse") {
      only_keys(j, {"type", "of"}, "inverse");
      return AutoSpec::inverse(autospec_from_json(f, need(j, "of", "inverse")));
    }
    fail(ErrorCode::Parse, "unknown transform type '" + type + "'");
  });
}

json to_json(const CanonResult& r) {
  json t = json::array();
  for (const auto& a : r.transforms) t.push_back(to_json(a));
  return {{"schema", kSchema},
          {"label", std::string(to_string(r.label))},
          {"field", to_json(r.field)},
          {"transforms", t},
          {"extension", r.extension_used ? json(r.extension_used->to_string()) : json(nullptr)},
          {"antiauto", r.used_antiauto}};
}

json to_json(const Fingerprint& fp) {
  json j{{"dim", fp.dim},
         {"rad_dim", fp.rad_dim},
         {"rad_sq_dim", fp.rad_sq_dim},
         {"ss_dim", fp.ss_dim},
         {"center_dim", fp.center_dim},
         {"rad_in_left_ann", fp.rad_in_left_ann},
         {"rad_in_right_ann", fp.rad_in_right_ann},
         {"is_m2", fp.is_m2}};
  j["idem_trace_set"] = fp.idem_trace_set ? json(*fp.idem_trace_set) : json(nullptr);
  j["unit_on_rad_sq"] = fp.unit_on_rad_sq ? json(*fp.unit_on_rad_sq) : json(nullptr);
  return j;
}

json to_json(const SeparationReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"label", std::string(to_string(row.label))}, {"fingerprint", to_json(row.fp)}});
  json pairs = json::array();
  for (const auto& p : r.pairs)
    pairs.push_back({{"a", std::string(to_string(p.a))}, {"b", std::string(to_string(p.b))}, {"differing", p.differing}});
  return {{"schema", kSchema}, {"rows", rows}, {"pairs", pairs}, {"ok", r.ok()}};
}

json to_json(const SearchReport& r) {
  return {{"schema", kSchema},
          {"field", to_json(r.field)},
          {"M", std::string(to_string(r.m))},
          {"candidates_scanned", r.candidates_scanned},
          {"valid_decompositions", r.valid_decompositions},
          {"label_histogram", histogram(r.label_histogram)},
          {"extension_required", r.extension_required},
          {"extension_histogram", histogram(r.extension_histogram)},
          {"failures", r.failures}};
}

json to_json(const RBOperator& r) {
  json m = json::array();
  for (std::size_t i = 0; i < 9; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < 9; ++k) row.push_back(r.matrix(i, k).to_string());
    m.push_back(row);
  }
  return {{"schema", kSchema},
          {"field", to_json(r.matrix.field())},
          {"weight", r.weight.to_string()},
          {"source", r.source ? json(std::string(to_string(*r.source))) : json(nullptr)},
          {"matrix", m}};
}

json to_json(const DecompositionCheck& c) {
  return {{"complementary", c.complementary},
          {"direct", c.direct},
          {"s_nonunital", c.s_nonunital},
          {"m_nonunital", c.m_nonunital},
          {"ok", c.ok()},
          {"failures", c.failures()}};
}

}  // namespace matdecomp::io
