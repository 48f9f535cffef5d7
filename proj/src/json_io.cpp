#include "toruskk/json_io.hpp"

#include <limits>
#include <sstream>

#include "toruskk/version.hpp"

namespace toruskk {

Json intToJson(const Int& v) {
  static const Int kMin = Int(std::numeric_limits<std::int64_t>::min());
  static const Int kMax = Int(std::numeric_limits<std::int64_t>::max());
  if (v >= kMin && v <= kMax) return static_cast<std::int64_t>(v);
  return v.str();
}

namespace {

Int intFromJson(const Json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  fail(ErrorKind::Parse, std::string(what) + " must be an integer or integer string");
}

Variance varianceFromString(const std::string& s) {
  if (s == "x") return Variance::X;
  if (s == "y") return Variance::Y;
  fail(ErrorKind::Parse, "variance must be \"x\" or \"y\", got \"" + s + "\"");
}

Side sideFromString(const std::string& s) {
  if (s == "base") return Side::Base;
  if (s == "dual") return Side::Dual;
  fail(ErrorKind::Parse, "side must be \"base\" or \"dual\", got \"" + s + "\"");
}

template <typename T>
T field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    fail(ErrorKind::Parse, std::string("missing field \"") + name + "\"");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorKind::Parse, std::string("bad type for field \"") + name + "\"");
  }
}

} // namespace

std::string monomialLabel(const IndexSet& idx) {
  std::ostringstream out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out << ",";
    out << idx[i];
  }
  return out.str();
}

Json classToJson(const ExteriorClass& cls) {
  Json terms = Json::array();
  for (const auto& [idx, c] : cls.terms()) {
    Json term;
    term["idx"] = idx;
    term["c"] = intToJson(c);
    terms.push_back(std::move(term));
  }
  Json j;
  j["d"] = cls.spec().d;
  j["variance"] = varianceName(cls.spec().variance);
  j["side"] = sideName(cls.spec().side);
  j["terms"] = std::move(terms);
  return j;
}

ExteriorClass classFromJson(const Json& j) {
  AlgebraSpec spec;
  spec.d = field<int>(j, "d");
  if (spec.d < 0) fail(ErrorKind::Parse, "d must be nonnegative");
  spec.variance = varianceFromString(field<std::string>(j, "variance"));
  spec.side = sideFromString(field<std::string>(j, "side"));
  ExteriorClass cls(spec);
  if (!j.contains("terms")) fail(ErrorKind::Parse, "missing field \"terms\"");
  if (!j.at("terms").is_array()) fail(ErrorKind::Parse, "\"terms\" must be an array");
  for (const Json& term : j.at("terms")) {
    IndexSet idx = field<IndexSet>(term, "idx");
    if (!isValidIndexSet(idx, spec.d))
      fail(ErrorKind::Parse, "term index set must be ascending and within 1..d");
    if (!term.contains("c")) fail(ErrorKind::Parse, "missing coefficient \"c\"");
    Int c = intFromJson(term.at("c"), "coefficient");
    if (c == 0) fail(ErrorKind::Parse, "stored coefficients must be nonzero");
    cls.addTerm(idx, c);
  }
  return cls;
}

Json subtorusToJson(const OrientedSubtorus& t) {
  Json j;
  j["d"] = t.d;
  j["side"] = sideName(t.side);
  j["basis"] = t.basis.toText();
  return j;
}

OrientedSubtorus subtorusFromJson(const Json& j) {
  int d = field<int>(j, "d");
  Side side = sideFromString(field<std::string>(j, "side"));
  IntMatrix basis = IntMatrix::fromText(field<std::string>(j, "basis"));
  return makeSubtorus(d, side, std::move(basis));
}

Json torusPointToJson(const TorusPoint& p) {
  Json arr = Json::array();
  for (const Rational& c : p.coords) {
    std::ostringstream out;
    out << c;
    arr.push_back(out.str());
  }
  return arr;
}

Json intersectionToJson(const IntersectionData& data) {
  Json j;
  j["transverse"] = data.transverse;
  if (!data.transverse) return j;
  j["componentCount"] = intToJson(data.componentCount);
  j["identityComponent"] = subtorusToJson(data.identityComponent);
  return j;
}

Json mapToJson(const GradedLinearMap& m) {
  auto specJson = [](const AlgebraSpec& s) {
    Json j;
    j["d"] = s.d;
    j["variance"] = varianceName(s.variance);
    j["side"] = sideName(s.side);
    return j;
  };
  Json j;
  j["source"] = specJson(m.sourceSpec());
  j["target"] = specJson(m.targetSpec());
  j["degreeShift"] = m.degreeShift();
  Json src = Json::array(), tgt = Json::array();
  for (const IndexSet& s : m.sourceMonomials()) src.push_back(monomialLabel(s));
  for (const IndexSet& t : m.targetMonomials()) tgt.push_back(monomialLabel(t));
  j["sourceMonomials"] = std::move(src);
  j["targetMonomials"] = std::move(tgt);
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.matrix().rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.matrix().cols(); ++c) row.push_back(intToJson(m.matrix().at(r, c)));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

std::string mapToAlignedText(const GradedLinearMap& m) {
  const char* sv = varianceName(m.sourceSpec().variance);
  const char* tv = varianceName(m.targetSpec().variance);
  std::vector<std::string> rowLabels, colLabels;
  for (const IndexSet& s : m.targetMonomials()) rowLabels.push_back(std::string(tv) + "[" + monomialLabel(s) + "]");
  for (const IndexSet& s : m.sourceMonomials()) colLabels.push_back(std::string(sv) + "[" + monomialLabel(s) + "]");
  std::vector<std::vector<std::string>> cells(m.matrix().rows());
  std::vector<std::size_t> width(colLabels.size());
  for (std::size_t c = 0; c < colLabels.size(); ++c) width[c] = colLabels[c].size();
  std::size_t labelWidth = 0;
  for (const std::string& l : rowLabels) labelWidth = std::max(labelWidth, l.size());
  for (std::size_t r = 0; r < m.matrix().rows(); ++r) {
    for (std::size_t c = 0; c < m.matrix().cols(); ++c) {
      cells[r].push_back(m.matrix().at(r, c).str());
      width[c] = std::max(width[c], cells[r][c].size());
    }
  }
  std::ostringstream out;
  out << m.sourceSpec().describe() << " -> " << m.targetSpec().describe()
      << "  degree shift " << m.degreeShift() << "\n";
  out << std::string(labelWidth, ' ');
  for (std::size_t c = 0; c < colLabels.size(); ++c)
    out << " " << std::string(width[c] - colLabels[c].size(), ' ') << colLabels[c];
  out << "\n";
  for (std::size_t r = 0; r < m.matrix().rows(); ++r) {
    out << rowLabels[r] << std::string(labelWidth - rowLabels[r].size(), ' ');
    for (std::size_t c = 0; c < cells[r].size(); ++c)
      out << " " << std::string(width[c] - cells[r][c].size(), ' ') << cells[r][c];
    out << "\n";
  }
  return out.str();
}

Json reportToJson(const VerifyReport& r) {
  Json j;
  j["tool"] = "toruskk";
  j["version"] = kVersion;
  j["d"] = r.d;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["allPass"] = r.allPass();
  Json props = Json::array();
  for (const PropertyResult& p : r.properties) {
    Json pj;
    pj["name"] = p.name;
    pj["pass"] = p.pass;
    pj["checks"] = p.checks;
    pj["counterexample"] = p.counterexample;
    props.push_back(std::move(pj));
  }
  j["properties"] = std::move(props);
  return j;
}

} // namespace toruskk
