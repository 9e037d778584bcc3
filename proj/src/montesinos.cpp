#include "orbiknot/montesinos.hpp"

#include <algorithm>
#include <numeric>

#include "orbiknot/diagrams.hpp"
#include "orbiknot/pd_code.hpp"

namespace orbiknot {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

Rational fractional_part(Rational const &x) {
  return Rational(floor_mod(x.numerator(), x.denominator()), x.denominator());
}

std::vector<Rational> least_dihedral_image(std::vector<Rational> const &seq) {
  auto best = seq;
  auto n = seq.size();
  for (int reflect = 0; reflect < 2; ++reflect) {
    auto base = seq;
    if (reflect) std::reverse(base.begin(), base.end());
    for (std::size_t shift = 0; shift < n; ++shift) {
      std::vector<Rational> image(n);
      for (std::size_t i = 0; i < n; ++i) image[i] = base[(i + shift) % n];
      if (std::lexicographical_compare(image.begin(), image.end(), best.begin(), best.end())) best = image;
    }
  }
  return best;
}

std::string fractions_text(std::vector<Rational> const &fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ",";
    out += to_string(fs[i]);
  }
  return out;
}

}  // namespace

NormalForm normalize(MontesinosLink const &m) {
  require_valid(m);
  NormalForm nf;
  Rational e0(0);
  std::vector<Rational> reduced;
  for (auto const &t : m.tangles) {
    e0 += t;
    reduced.push_back(fractional_part(t));
  }
  nf.canonical = least_dihedral_image(reduced);
  nf.seifert.e0 = e0;
  nf.seifert.exceptional_fibers = nf.canonical;
  return nf;
}

MontesinosLink canonical_link(MontesinosLink const &m) {
  auto nf = normalize(m);
  MontesinosLink out{nf.canonical};
  Rational sum(0);
  for (auto const &f : nf.canonical) sum += f;
  out.tangles.front() += nf.seifert.e0 - sum;
  return out;
}

bool equivalent(MontesinosLink const &a, MontesinosLink const &b) {
  if (a.r() < 3 || b.r() < 3) {
    throw MontesinosError("Montesinos classification needs at least three tangles");
  }
  auto na = normalize(a);
  auto nb = normalize(b);
  return na.seifert.e0 == nb.seifert.e0 && na.canonical == nb.canonical;
}

BigInt det(MontesinosLink const &m) {
  require_valid(m);
  BigInt sum = 0;
  for (std::size_t i = 0; i < m.r(); ++i) {
    BigInt term = m.tangles[i].numerator();
    for (std::size_t j = 0; j < m.r(); ++j) {
      if (j != i) term *= m.tangles[j].denominator();
    }
    sum += term;
  }
  return abs(sum);
}

bool is_elliptic(MontesinosLink const &m) {
  require_valid(m);
  if (m.r() != 3) return false;
  Rational s(0);
  for (auto const &t : m.tangles) s += Rational(1, t.denominator());
  return s > Rational(1);
}

std::pair<int, int> rank_bounds(MontesinosLink const &m) {
  require_valid(m);
  if (m.r() < 3) throw MontesinosError("rank bounds need at least three tangles");
  int r = static_cast<int>(m.r());
  return {r - 2, r - 1};
}

int two_bridge_class_representative(int p, int q) {
  if (p == 1) return 0;
  auto qm = floor_mod(q, p);
  std::int64_t inv = 0;
  for (std::int64_t x = 1; x < p; ++x) {
    if (qm * x % p == 1) {
      inv = x;
      break;
    }
  }
  if (inv == 0) throw std::invalid_argument("q must be a unit mod p");
  return static_cast<int>(std::min({qm, p - qm, inv, p - inv}));
}

TwoBridgeParams as_two_bridge(MontesinosLink const &m) {
  require_valid(m);
  if (m.r() > 2) throw MontesinosError("a Montesinos link with more than two tangles is not 2-bridge");
  std::int64_t p = 0;
  std::int64_t q = 0;
  auto b1 = m.tangles[0].numerator();
  auto a1 = m.tangles[0].denominator();
  if (m.r() == 1) {
    p = std::abs(b1);
    q = a1;
  } else {
    auto b2 = m.tangles[1].numerator();
    auto a2 = m.tangles[1].denominator();
    p = std::abs(b1 * a2 + b2 * a1);
    // u = b2^{-1} mod a2 and v with b2 u - a2 v = 1.
    std::int64_t u = 1;
    while (floor_mod(b2 * u, a2) != 1) ++u;
    std::int64_t v = (b2 * u - 1) / a2;
    q = b1 * u + a1 * v;
  }
  if (p == 0) throw MontesinosError("the link is split (determinant zero), not a 2-bridge link");
  if (p == 1) return {1, 0};
  return {static_cast<int>(p), two_bridge_class_representative(static_cast<int>(p), static_cast<int>(floor_mod(q, p)))};
}

LinkClassDescriptor LinkClassDescriptor::unknot() { return {}; }

LinkClassDescriptor LinkClassDescriptor::make_two_bridge(int p, int q) {
  LinkClassDescriptor d;
  d.kind = Kind::TwoBridge;
  d.two_bridge = {p, q};
  return d;
}

LinkClassDescriptor LinkClassDescriptor::make_montesinos(MontesinosLink m) {
  LinkClassDescriptor d;
  d.kind = Kind::Montesinos;
  d.montesinos = std::move(m);
  return d;
}

LinkClassDescriptor LinkClassDescriptor::connected_sum(std::vector<LinkClassDescriptor> factors) {
  LinkClassDescriptor d;
  d.kind = Kind::ConnectedSum;
  d.factors = std::move(factors);
  return d;
}

LinkClassDescriptor LinkClassDescriptor::seifert_link(std::string tag) {
  LinkClassDescriptor d;
  d.kind = Kind::SeifertLink;
  d.tag = std::move(tag);
  return d;
}

LinkClassDescriptor LinkClassDescriptor::torus_knot(int p, int q) {
  LinkClassDescriptor d;
  d.kind = Kind::TorusKnot;
  d.torus_p = p;
  d.torus_q = q;
  return d;
}

void require_valid(LinkClassDescriptor const &d) {
  using Kind = LinkClassDescriptor::Kind;
  switch (d.kind) {
    case Kind::Unknot:
    case Kind::SeifertLink:
      return;
    case Kind::TwoBridge:
      try {
        require_valid(d.two_bridge);
      } catch (std::invalid_argument const &e) {
        throw DescriptorError(e.what());
      }
      return;
    case Kind::Montesinos:
      try {
        require_valid(d.montesinos);
      } catch (MontesinosError const &e) {
        throw DescriptorError(e.what());
      }
      return;
    case Kind::TorusKnot:
      if (std::abs(d.torus_p) < 2 || std::abs(d.torus_q) < 2 || std::gcd(d.torus_p, d.torus_q) != 1) {
        throw DescriptorError("torus knot needs |p|,|q| >= 2 and gcd(p,q) = 1");
      }
      return;
    case Kind::ConnectedSum:
      if (d.factors.size() < 2) throw DescriptorError("connected sum needs at least two factors");
      for (auto const &f : d.factors) {
        if (f.kind == Kind::Unknot) throw DescriptorError("connected sum factor may not be the unknot");
        require_valid(f);
      }
      return;
  }
}

LinkClassDescriptor parse_descriptor(std::string_view text) {
  auto colon = text.find(':');
  auto head = text.substr(0, colon);
  auto body = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (body.size() >= 2 && body.front() == '"' && body.back() == '"') body = body.substr(1, body.size() - 2);
  LinkClassDescriptor d;
  try {
    if (head == "unknot" && colon == std::string_view::npos) {
      d = LinkClassDescriptor::unknot();
    } else if (head == "twobridge") {
      auto slash = body.find('/');
      if (slash == std::string_view::npos) throw DescriptorError("twobridge needs p/q");
      d = LinkClassDescriptor::make_two_bridge(static_cast<int>(parse_rational(body.substr(0, slash)).numerator()),
                                               static_cast<int>(parse_rational(body.substr(slash + 1)).numerator()));
    } else if (head == "montesinos") {
      d = LinkClassDescriptor::make_montesinos(MontesinosLink{parse_rational_list(body)});
    } else if (head == "torus") {
      auto pq = parse_rational_list(body);
      if (pq.size() != 2) throw DescriptorError("torus needs p,q");
      d = LinkClassDescriptor::torus_knot(static_cast<int>(pq[0].numerator()), static_cast<int>(pq[1].numerator()));
    } else if (head == "seifert") {
      d = LinkClassDescriptor::seifert_link(std::string(body));
    } else if (head == "sum") {
      std::vector<LinkClassDescriptor> factors;
      while (!body.empty()) {
        auto plus = body.find('+');
        factors.push_back(parse_descriptor(body.substr(0, plus)));
        if (plus == std::string_view::npos) break;
        body.remove_prefix(plus + 1);
      }
      d = LinkClassDescriptor::connected_sum(std::move(factors));
    } else {
      throw DescriptorError("unknown link class '" + std::string(text) + "'");
    }
  } catch (DescriptorError const &) {
    throw;
  } catch (std::invalid_argument const &e) {
    throw DescriptorError(e.what());
  }
  require_valid(d);
  return d;
}

std::string to_string(LinkClassDescriptor const &d) {
  using Kind = LinkClassDescriptor::Kind;
  switch (d.kind) {
    case Kind::Unknot:
      return "unknot";
    case Kind::TwoBridge:
      return "twobridge:" + std::to_string(d.two_bridge.p) + "/" + std::to_string(d.two_bridge.q);
    case Kind::Montesinos:
      return "montesinos:" + fractions_text(d.montesinos.tangles);
    case Kind::TorusKnot:
      return "torus:" + std::to_string(d.torus_p) + "," + std::to_string(d.torus_q);
    case Kind::SeifertLink:
      return "seifert:" + d.tag;
    case Kind::ConnectedSum: {
      std::string out = "sum:";
      for (std::size_t i = 0; i < d.factors.size(); ++i) out += (i ? "+" : "") + to_string(d.factors[i]);
      return out;
    }
  }
  return {};
}

nlohmann::json to_json(LinkClassDescriptor const &d) {
  using Kind = LinkClassDescriptor::Kind;
  nlohmann::json j;
  switch (d.kind) {
    case Kind::Unknot:
      j["kind"] = "unknot";
      break;
    case Kind::TwoBridge:
      j = {{"kind", "twobridge"}, {"p", d.two_bridge.p}, {"q", d.two_bridge.q}};
      break;
    case Kind::Montesinos: {
      std::vector<std::string> fs;
      for (auto const &t : d.montesinos.tangles) fs.push_back(to_string(t));
      j = {{"kind", "montesinos"}, {"tangles", fs}};
      break;
    }
    case Kind::TorusKnot:
      j = {{"kind", "torus"}, {"p", d.torus_p}, {"q", d.torus_q}};
      break;
    case Kind::SeifertLink:
      j = {{"kind", "seifert"}, {"tag", d.tag}};
      break;
    case Kind::ConnectedSum: {
      j["kind"] = "sum";
      j["factors"] = nlohmann::json::array();
      for (auto const &f : d.factors) j["factors"].push_back(to_json(f));
      break;
    }
  }
  return j;
}

std::optional<BigInt> descriptor_det(LinkClassDescriptor const &d) {
  using Kind = LinkClassDescriptor::Kind;
  switch (d.kind) {
    case Kind::Unknot:
      return BigInt(1);
    case Kind::TwoBridge:
      return BigInt(d.two_bridge.p);
    case Kind::Montesinos:
      return det(d.montesinos);
    case Kind::TorusKnot: {
      int p = std::abs(d.torus_p);
      int q = std::abs(d.torus_q);
      if (p % 2 == 0) return BigInt(q);
      if (q % 2 == 0) return BigInt(p);
      return BigInt(1);
    }
    case Kind::SeifertLink:
      return std::nullopt;
    case Kind::ConnectedSum: {
      BigInt prod = 1;
      for (auto const &f : d.factors) {
        auto fd = descriptor_det(f);
        if (!fd) return std::nullopt;
        prod *= *fd;
      }
      return prod;
    }
  }
  return std::nullopt;
}

int bridge_number(LinkClassDescriptor const &d) {
  using Kind = LinkClassDescriptor::Kind;
  require_valid(d);
  switch (d.kind) {
    case Kind::Unknot:
      return 1;
    case Kind::TwoBridge:
      return d.two_bridge.p == 1 ? 1 : 2;
    case Kind::Montesinos:
      if (d.montesinos.r() >= 3) return static_cast<int>(d.montesinos.r());
      return as_two_bridge(d.montesinos).p == 1 ? 1 : 2;
    case Kind::TorusKnot:
      return std::min(std::abs(d.torus_p), std::abs(d.torus_q));
    case Kind::SeifertLink:
      throw DescriptorError("no bridge number is available for a Seifert link tag");
    case Kind::ConnectedSum: {
      int b = 1;
      for (auto const &f : d.factors) b += bridge_number(f) - 1;
      return b;
    }
  }
  return 0;
}

namespace {

enum class Family { Unknot, TwoBridge, EllipticMontesinos, Montesinos, Other };

struct Classified {
  Family family;
  int tangles = 0;
};

Classified classify_descriptor(LinkClassDescriptor const &d) {
  using Kind = LinkClassDescriptor::Kind;
  switch (d.kind) {
    case Kind::Unknot:
      return {Family::Unknot};
    case Kind::TwoBridge:
      return {d.two_bridge.p == 1 ? Family::Unknot : Family::TwoBridge};
    case Kind::Montesinos: {
      int r = static_cast<int>(d.montesinos.r());
      if (r <= 2) return {as_two_bridge(d.montesinos).p == 1 ? Family::Unknot : Family::TwoBridge, r};
      return {is_elliptic(d.montesinos) ? Family::EllipticMontesinos : Family::Montesinos, r};
    }
    case Kind::TorusKnot: {
      int p = std::min(std::abs(d.torus_p), std::abs(d.torus_q));
      int q = std::max(std::abs(d.torus_p), std::abs(d.torus_q));
      if (p == 2) return {Family::TwoBridge, 2};
      if (p == 3 && (q == 4 || q == 5)) return {Family::EllipticMontesinos, 3};
      return {Family::Other};
    }
    case Kind::SeifertLink:
    case Kind::ConnectedSum:
      return {Family::Other};
  }
  return {Family::Other};
}

void flatten_sum(LinkClassDescriptor const &d, std::vector<LinkClassDescriptor const *> &out) {
  if (d.kind == LinkClassDescriptor::Kind::ConnectedSum) {
    for (auto const &f : d.factors) flatten_sum(f, out);
  } else {
    out.push_back(&d);
  }
}

bool half_tangle_shape(std::vector<Rational> const &fractions) {
  int halves = 0;
  int odd = 0;
  for (auto const &f : fractions) {
    if (f == Rational(1, 2)) {
      ++halves;
    } else if (f.denominator() % 2 == 1) {
      ++odd;
    }
  }
  return odd == 1 && halves + 1 == static_cast<int>(fractions.size());
}

}  // namespace

DominationVerdict domination_filter(MontesinosLink const &src, LinkClassDescriptor const &candidate) {
  require_valid(src);
  require_valid(candidate);
  std::vector<std::string> passed;

  if (src.r() <= 2) {
    auto tb = as_two_bridge(src);
    auto c = classify_descriptor(candidate);
    if (c.family != Family::Unknot && c.family != Family::TwoBridge) {
      return DominationVerdict::excluded(
          "class", {"source is the 2-bridge link L(" + std::to_string(tb.p) + "/" + std::to_string(tb.q) +
                        "); a 2-bridge link dominates only 2-bridge links and the unknot"});
    }
    passed.push_back("class: source is 2-bridge, candidate is " +
                     std::string(c.family == Family::Unknot ? "the unknot" : "2-bridge"));
    auto cd = descriptor_det(candidate);
    if (*cd == 0 || BigInt(tb.p) % *cd != 0) {
      return DominationVerdict::excluded("det-divisibility", {"det " + cd->str() + " does not divide det " +
                                                                  std::to_string(tb.p)});
    }
    passed.push_back("det-divisibility: " + cd->str() + " | " + std::to_string(tb.p));
    return DominationVerdict::consistent(std::move(passed));
  }

  int r = static_cast<int>(src.r());
  auto c = classify_descriptor(candidate);
  if (candidate.kind == LinkClassDescriptor::Kind::ConnectedSum) {
    std::vector<LinkClassDescriptor const *> factors;
    flatten_sum(candidate, factors);
    int n1 = 0;
    int n2 = 0;
    for (auto const *f : factors) {
      auto fc = classify_descriptor(*f);
      if (fc.family == Family::TwoBridge) {
        ++n1;
      } else if (fc.family == Family::EllipticMontesinos) {
        ++n2;
      } else {
        return DominationVerdict::excluded(
            "class", {"connected-sum factor " + to_string(*f) + " is neither 2-bridge nor elliptic Montesinos"});
      }
    }
    passed.push_back("class: connected sum of 2-bridge and elliptic Montesinos links");
    auto bound = "n1 + 2 n2 = " + std::to_string(n1 + 2 * n2) + ", r - 1 = " + std::to_string(r - 1);
    if (n1 + 2 * n2 > r - 1) return DominationVerdict::excluded("connected-sum-bound", {bound});
    passed.push_back("connected-sum-bound: " + bound);
  } else if (c.family == Family::Other) {
    return DominationVerdict::excluded(
        "class", {to_string(candidate) + " is not the unknot, 2-bridge, Montesinos or an allowed connected sum"});
  } else if (c.family == Family::Unknot || c.family == Family::TwoBridge) {
    passed.push_back(std::string("class: ") + (c.family == Family::Unknot ? "unknot" : "2-bridge"));
  } else {
    passed.push_back("class: Montesinos");
    auto count = "r' = " + std::to_string(c.tangles) + ", r = " + std::to_string(r);
    if (c.tangles > r + 1) return DominationVerdict::excluded("tangle-count", {count + ", r' > r + 1"});
    passed.push_back("tangle-count: " + count);
    if (c.tangles == r + 1) {
      if (r % 2 == 0) return DominationVerdict::excluded("half-tangle-shape", {"r' = r + 1 needs r odd"});
      if (candidate.kind != LinkClassDescriptor::Kind::Montesinos ||
          !half_tangle_shape(normalize(candidate.montesinos).canonical)) {
        return DominationVerdict::excluded("half-tangle-shape",
                                           {"r' = r + 1 needs the shape b/(2a+1), 1/2, ..., 1/2"});
      }
      auto components = component_count(montesinos_diagram(src));
      if (static_cast<int>(components) != r) {
        return DominationVerdict::excluded(
            "half-tangle-shape", {"r' = r + 1 needs the source to have r = " + std::to_string(r) + " components, found " +
                                 std::to_string(components)});
      }
      passed.push_back("half-tangle-shape: b/(2a+1), 1/2, ..., 1/2 with r odd");
    }
  }

  auto sd = det(src);
  auto cd = descriptor_det(candidate);
  if (sd == 0) {
    passed.push_back("det-divisibility: not applicable, det(src) = 0");
  } else if (!cd) {
    passed.push_back("det-divisibility: candidate determinant unknown");
  } else if (*cd == 0 || sd % *cd != 0) {
    return DominationVerdict::excluded("det-divisibility",
                                       {"det " + cd->str() + " does not divide det " + sd.str()});
  } else {
    passed.push_back("det-divisibility: " + cd->str() + " | " + sd.str());
  }
  return DominationVerdict::consistent(std::move(passed));
}

}  // namespace orbiknot
