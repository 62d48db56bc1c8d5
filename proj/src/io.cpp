#include "tenscat/io.hpp"

#include <algorithm>
#include <cctype>
#include <utility>
#include <vector>

namespace tenscat {

namespace {

// Cursor over a literal; all parse errors carry the absolute offset.
struct Scanner {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw ParseError(std::string("expected '") + c + "' in " + what, s, pos);
    ++pos;
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw ParseError(msg, s, at);
  }

  long long integer(const char* what) {
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail(std::string("expected integer in ") + what, pos);
    long long value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      value = value * 10 + (s[pos] - '0');
      if (value > 1'000'000) fail("integer literal too large", start);
      ++pos;
    }
    return neg ? -value : value;
  }

  void expect_end(const char* what) {
    skip_ws();
    if (pos != s.size())
      fail(std::string("trailing characters after ") + what, pos);
  }
};

YoungDiagram scan_diagram(Scanner& sc) {
  sc.expect('[', "diagram literal");
  std::vector<int> rows;
  if (!sc.peek_is(']')) {
    while (true) {
      sc.skip_ws();
      const std::size_t at = sc.pos;
      const long long r = sc.integer("diagram literal");
      if (r < 1) sc.fail("row lengths must be positive", at);
      if (!rows.empty() && r > rows.back())
        sc.fail("row lengths must be weakly decreasing", at);
      rows.push_back(static_cast<int>(r));
      if (sc.peek_is(']')) break;
      sc.expect(',', "diagram literal");
    }
  }
  sc.expect(']', "diagram literal");
  return YoungDiagram(std::move(rows));
}

SimpleLabel scan_label(Scanner& sc) {
  sc.expect('(', "label literal");
  YoungDiagram lam = scan_diagram(sc);
  sc.expect(',', "label literal");
  YoungDiagram mu = scan_diagram(sc);
  sc.expect(')', "label literal");
  return {std::move(lam), std::move(mu)};
}

}  // namespace

std::string format_diagram(const YoungDiagram& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.num_rows(); ++i) {
    if (i) s += ',';
    s += std::to_string(d.rows()[i]);
  }
  return s + "]";
}

YoungDiagram parse_diagram(const std::string& s) {
  Scanner sc{s};
  YoungDiagram d = scan_diagram(sc);
  sc.expect_end("diagram literal");
  return d;
}

std::string format_label(const SimpleLabel& label) {
  return "(" + format_diagram(label.lam) + "," + format_diagram(label.mu) + ")";
}

SimpleLabel parse_label(const std::string& s) {
  Scanner sc{s};
  SimpleLabel label = scan_label(sc);
  sc.expect_end("label literal");
  return label;
}

std::string format_weight(const Weight& w) { return w.text(); }

Weight parse_weight(const std::string& s) {
  Scanner sc{s};
  sc.skip_ws();
  Weight w;
  if (sc.pos == s.size()) return w;  // empty literal is the zero weight
  int last_j = 0;
  while (true) {
    sc.skip_ws();
    const std::size_t at_j = sc.pos;
    const long long j = sc.integer("weight literal");
    if (j < 1) sc.fail("weight coordinates start at 1", at_j);
    if (j <= last_j) sc.fail("weight coordinates must be strictly increasing", at_j);
    sc.expect(':', "weight literal");
    const std::size_t at_n = sc.pos;
    const long long n = sc.integer("weight literal");
    if (n == 0) sc.fail("weight coefficients must be nonzero", at_n);
    w.add(static_cast<int>(j), static_cast<int>(n));
    last_j = static_cast<int>(j);
    sc.skip_ws();
    if (sc.pos == s.size()) break;
    sc.expect(',', "weight literal");
  }
  return w;
}

std::string format_shape(TensorShape s) {
  return std::to_string(s.p) + "," + std::to_string(s.q);
}

TensorShape parse_shape(const std::string& s) {
  Scanner sc{s};
  const std::size_t at_p = sc.pos;
  const long long p = sc.integer("shape literal");
  if (p < 0) sc.fail("slot counts must be nonnegative", at_p);
  sc.expect(',', "shape literal");
  const std::size_t at_q = sc.pos;
  const long long q = sc.integer("shape literal");
  if (q < 0) sc.fail("slot counts must be nonnegative", at_q);
  sc.expect_end("shape literal");
  return {static_cast<int>(p), static_cast<int>(q)};
}

std::string caret_message(const ParseError& e) {
  std::string out = "error: ";
  out += e.what();
  out += "\n  ";
  out += e.input();
  out += "\n  ";
  out.append(e.offset(), ' ');
  out += "^";
  return out;
}

nlohmann::json multiset_to_json(const LabelMultiset& ms) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [label, mult] : ms)
    arr.push_back({{"label", format_label(label)}, {"mult", mult}});
  return arr;
}

nlohmann::json layers_to_json(const FiltrationLayers& layers) {
  nlohmann::json arr = nlohmann::json::array();
  for (const LabelMultiset& layer : layers.layers) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [label, mult] : layer) obj[format_label(label)] = mult;
    arr.push_back(std::move(obj));
  }
  return arr;
}

nlohmann::json expansion_to_json(const std::map<YoungDiagram, std::int64_t>& exp) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [d, c] : exp)
    arr.push_back({{"diagram", format_diagram(d)}, {"coeff", c}});
  return arr;
}

namespace {

std::vector<std::pair<std::string, std::int64_t>> weightmap_rows(
    const WeightMultiplicities& wm) {
  std::vector<std::pair<std::string, std::int64_t>> rows;
  rows.reserve(wm.size());
  for (const auto& [w, m] : wm) rows.emplace_back(w.text(), m);
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

nlohmann::json weightmap_to_json(const WeightMultiplicities& wm) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [text, mult] : weightmap_rows(wm))
    arr.push_back({{"weight", text}, {"mult", mult}});
  return arr;
}

nlohmann::json diagram_to_json(const ContractionDiagram& d) {
  nlohmann::json contract = nlohmann::json::array();
  for (const auto& [a, b] : d.contractions()) contract.push_back({a, b});
  return {{"src", {d.source().p, d.source().q}},
          {"tgt", {d.target().p, d.target().q}},
          {"contract", std::move(contract)},
          {"vmap", d.v_map_compressed()},
          {"dmap", d.dual_map_compressed()}};
}

ContractionDiagram diagram_from_json(const nlohmann::json& j) {
  const auto shape = [](const nlohmann::json& v, const char* what) {
    if (!v.is_array() || v.size() != 2)
      throw DomainError(std::string("diagram JSON: ") + what + " must be [p,q]");
    return TensorShape{v[0].get<int>(), v[1].get<int>()};
  };
  const TensorShape src = shape(j.at("src"), "src");
  const TensorShape tgt = shape(j.at("tgt"), "tgt");

  std::vector<std::pair<int, int>> contractions;
  for (const auto& pair : j.at("contract")) {
    if (!pair.is_array() || pair.size() != 2)
      throw DomainError("diagram JSON: contractions must be [a,b] pairs");
    contractions.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }

  // Expand the compressed maps back over the full slot range.
  const auto expand = [&](const nlohmann::json& compressed, int slots,
                          const std::vector<bool>& contracted) {
    std::vector<int> map(static_cast<std::size_t>(slots), 0);
    std::size_t next = 0;
    const auto values = compressed.get<std::vector<int>>();
    for (int s = 1; s <= slots; ++s) {
      if (contracted[static_cast<std::size_t>(s)]) continue;
      if (next >= values.size())
        throw DomainError("diagram JSON: slot map too short");
      map[static_cast<std::size_t>(s - 1)] = values[next++];
    }
    if (next != values.size())
      throw DomainError("diagram JSON: slot map too long");
    return map;
  };
  std::vector<bool> v_contracted(static_cast<std::size_t>(std::max(src.p, 0)) + 1, false);
  std::vector<bool> d_contracted(static_cast<std::size_t>(std::max(src.q, 0)) + 1, false);
  for (const auto& [a, b] : contractions) {
    if (a < 1 || a > src.p || b < 1 || b > src.q)
      throw DomainError("diagram JSON: contraction index out of range");
    v_contracted[static_cast<std::size_t>(a)] = true;
    d_contracted[static_cast<std::size_t>(b)] = true;
  }

  ContractionDiagram d = ContractionDiagram::make(
      src, std::move(contractions), expand(j.at("vmap"), src.p, v_contracted),
      expand(j.at("dmap"), src.q, d_contracted));
  if (!(d.target() == tgt))
    throw DomainError("diagram JSON: declared target shape is inconsistent");
  return d;
}

nlohmann::json ext_table_to_json(const std::vector<ExtTableEntry>& entries) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ExtTableEntry& e : entries)
    arr.push_back({{"src", format_label(e.src)},
                   {"tgt", format_label(e.tgt)},
                   {"i", e.degree},
                   {"dim", e.dim}});
  return arr;
}

std::string multiset_to_text(const LabelMultiset& ms) {
  std::string out;
  for (const auto& [label, mult] : ms)
    out += format_label(label) + "  " + std::to_string(mult) + "\n";
  return out;
}

std::string layers_to_text(const FiltrationLayers& layers) {
  std::string out;
  for (std::size_t i = 0; i < layers.layers.size(); ++i) {
    out += "layer " + std::to_string(i) + "\n";
    out += multiset_to_text(layers.layers[i]);
  }
  return out;
}

std::string expansion_to_text(const std::map<YoungDiagram, std::int64_t>& exp) {
  std::string out;
  for (const auto& [d, c] : exp)
    out += format_diagram(d) + "  " + std::to_string(c) + "\n";
  return out;
}

std::string weightmap_to_text(const WeightMultiplicities& wm) {
  std::string out;
  for (const auto& [text, mult] : weightmap_rows(wm))
    out += text + "  " + std::to_string(mult) + "\n";
  return out;
}

std::string ext_table_to_text(const std::vector<ExtTableEntry>& entries) {
  std::string out;
  for (const ExtTableEntry& e : entries)
    out += format_label(e.src) + "  " + format_label(e.tgt) + "  " +
           std::to_string(e.degree) + "  " + std::to_string(e.dim) + "\n";
  return out;
}

}  // namespace tenscat
