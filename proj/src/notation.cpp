#include "clutters/notation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <vector>

namespace clutters {

namespace {

struct RawCircuit {
  std::vector<long> labels;  // distinct, sorted
  std::size_t position;      // where the token started
  std::string text;          // original token, for diagnostics
};

bool is_label_char(char c) { return c >= '1' && c <= '9'; }

std::vector<RawCircuit> tokenize(const std::string& text) {
  std::vector<RawCircuit> out;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) != 0))
      ++i;
  };
  skip_ws();
  bool expect_token = false;
  while (i < text.size()) {
    RawCircuit raw;
    raw.position = i;
    if (text[i] == '{') {
      const std::size_t open = i++;
      std::set<long> labels;
      while (true) {
        skip_ws();
        if (i >= text.size()) throw ParseError("unterminated '{'", open);
        if (text[i] == '}') {
          ++i;
          break;
        }
        if (std::isdigit(static_cast<unsigned char>(text[i])) == 0)
          throw ParseError("expected a vertex label", i);
        long value = 0;
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0)
          value = value * 10 + (text[i++] - '0');
        if (value < 1) throw ParseError("labels start at 1", start);
        if (!labels.insert(value).second)
          throw ParseError("duplicate vertex in circuit", start);
      }
      raw.labels.assign(labels.begin(), labels.end());
      raw.text = text.substr(open, i - open);
    } else if (is_label_char(text[i])) {
      std::set<long> labels;
      const std::size_t start = i;
      while (i < text.size() && is_label_char(text[i])) {
        if (!labels.insert(text[i] - '0').second)
          throw ParseError("duplicate vertex in circuit", i);
        ++i;
      }
      raw.labels.assign(labels.begin(), labels.end());
      raw.text = text.substr(start, i - start);
    } else {
      throw ParseError("expected a circuit", i);
    }
    out.push_back(std::move(raw));
    skip_ws();
    expect_token = false;
    if (i < text.size()) {
      if (text[i] != ',') throw ParseError("expected ','", i);
      ++i;
      skip_ws();
      expect_token = true;
    }
  }
  if (expect_token) throw ParseError("trailing ','", text.size());
  return out;
}

}  // namespace

std::pair<Clutter, LabeledGround> parse_clutter(const std::string& text) {
  const std::vector<RawCircuit> raw = tokenize(text);

  std::set<long> all_labels;
  for (const RawCircuit& r : raw)
    all_labels.insert(r.labels.begin(), r.labels.end());
  if (all_labels.size() > static_cast<std::size_t>(kMaxVertices))
    throw ParseError("more than 32 distinct vertex labels", 0);

  std::map<long, int> index;
  LabeledGround ground;
  for (long label : all_labels) {
    index[label] = ground.size();
    ground.labels.push_back(std::to_string(label));
  }

  std::vector<BitFace> circuits;
  circuits.reserve(raw.size());
  for (const RawCircuit& r : raw) {
    Mask m = 0;
    for (long label : r.labels) m |= Mask{1} << index[label];
    circuits.push_back(BitFace(m));
  }

  // Report antichain violations in terms of the offending tokens.
  for (std::size_t i = 0; i < circuits.size(); ++i)
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i < j && circuits[i] == circuits[j])
        throw ParseError("repeated circuit \"" + raw[j].text + "\"",
                         raw[j].position);
      if (i != j && circuits[i].proper_subset_of(circuits[j]))
        throw AntichainError(raw[i].text, raw[j].text);
    }

  return {Clutter(static_cast<int>(all_labels.size()), std::move(circuits)),
          std::move(ground)};
}

namespace {

bool all_single_char(const LabeledGround& labels) {
  for (const std::string& s : labels.labels)
    if (s.size() != 1 || !is_label_char(s[0])) return false;
  return true;
}

std::string face_string(BitFace f, const LabeledGround& labels, bool compact) {
  if (f.empty()) return "{}";
  std::string out;
  if (!compact) out += "{";
  bool first = true;
  for (int v : f) {
    if (!compact && !first) out += " ";
    out += labels.labels[static_cast<std::size_t>(v)];
    first = false;
  }
  if (!compact) out += "}";
  return out;
}

std::string format_antichain(const std::vector<BitFace>& faces,
                             const LabeledGround& labels) {
  const bool compact = all_single_char(labels);
  std::vector<std::string> tokens;
  tokens.reserve(faces.size());
  for (BitFace f : faces) tokens.push_back(face_string(f, labels, compact));
  std::sort(tokens.begin(), tokens.end());
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ", ";
    out += tokens[i];
  }
  return out;
}

}  // namespace

std::string format_clutter(const Clutter& c, const LabeledGround& labels) {
  if (labels.size() != c.n())
    throw std::invalid_argument("label count does not match ground set");
  return format_antichain(c.circuits(), labels);
}

std::string format_clutter(const Clutter& c) {
  return format_clutter(c, LabeledGround::numeric(c.n()));
}

std::string format_face(BitFace f, const LabeledGround& labels) {
  return face_string(f, labels, all_single_char(labels));
}

std::string format_face(BitFace f) {
  int top = 0;
  for (int v : f) top = v + 1;
  return format_face(f, LabeledGround::numeric(top));
}

std::string format_facets(const SimplicialComplex& d) {
  return format_antichain(d.facets(), LabeledGround::numeric(d.n()));
}

}  // namespace clutters
