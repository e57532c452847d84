// Embedding into U. A term that condenses to a point at the countable level
// is, in normal form, a countable order, U-many copies of a countable C, or
// (w1*-many copies of C) + countable + (w1-many copies of C'), any part
// optional. Every point then falls into a countable block of U: the negative
// blocks -u_a with Q(-a), the middle Q(mid), or the positive blocks u_a with
// Q(a). Block ends become spine points (NEW where the source has none) and
// the rest of each block is embedded into its rationals.
#include "ordertype/embed.hpp"

#include <map>

#include "ordertype/classify.hpp"
#include "ordertype/condense.hpp"
#include "ordertype/errors.hpp"
#include "ordertype/generate.hpp"
#include "ordertype/normalize.hpp"

namespace ordertype {

namespace {

using Side = UPoint::Side;

bool isCountable(const OrderTerm& t) { return structuralProfile(t).card.isSmall(Level::Countable); }

struct Block {
  Side side = Side::Mid;
  Ordinal index;

  UPoint anchor() const {
    return side == Side::Mid ? UPoint::rational(Side::Mid, {}, 0) : UPoint::spinePoint(side, index);
  }
  friend bool operator<(const Block& a, const Block& b) { return compareU(a.anchor(), b.anchor()) < 0; }
};

// One summand: a countable order C repeated along w1, w1* or U (or C alone).
struct Piece {
  enum class Along { None, Up, Down, Line } along = Along::None;
  OrderTerm fibre;
  bool atom = false;  // the bare atom, whose codes are not pairs

  std::optional<PointCode> spineInner(Side side) const {
    return side == Side::Neg ? lastPoint(fibre) : firstPoint(fibre);
  }
  PointCode join(PointCode outer, PointCode inner) const {
    return atom ? outer : PointCode::pair(std::move(outer), std::move(inner));
  }
};

Piece pieceOf(const OrderTerm& t) {
  const auto along = [](Kind k) {
    switch (k) {
      case Kind::Omega1: return Piece::Along::Up;
      case Kind::Omega1Rev: return Piece::Along::Down;
      case Kind::ULine: return Piece::Along::Line;
      default: return Piece::Along::None;
    }
  };
  if (isCountable(t)) return {Piece::Along::None, t, false};
  if (auto a = along(t.kind()); a != Piece::Along::None) return {a, OrderTerm::finite(1), true};
  if (t.is(Kind::Product) && isCountable(t.inner()))
    if (auto a = along(t.outer().kind()); a != Piece::Along::None) return {a, t.inner(), false};
  unsupported("no embedding construction for " + t.toString());
}

class Embedding {
 public:
  explicit Embedding(const OrderTerm& t) : t_(t) {
    if (t.is(Kind::Sum)) parts_.assign(t.parts().begin(), t.parts().end());
    else parts_.push_back(t);
    for (const auto& p : parts_) pieces_.push_back(pieceOf(p));
    // Down blocks must come first, Up blocks last, and U stands alone.
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      const auto a = pieces_[i].along;
      if ((a == Piece::Along::Down && i != 0) || (a == Piece::Along::Up && i + 1 != pieces_.size()) ||
          (a == Piece::Along::Line && pieces_.size() != 1))
        unsupported("no embedding construction for " + t.toString());
    }
  }

  std::string construction() const {
    bool up = false, down = false;
    for (const auto& p : pieces_) {
      up = up || p.along == Piece::Along::Up || p.along == Piece::Along::Line;
      down = down || p.along == Piece::Along::Down || p.along == Piece::Along::Line;
    }
    if (up && down) return "two-sided";
    if (up) return "increasing-spine";
    if (down) return "decreasing-spine";
    return "countable";
  }

  // Block of p, and whether p is the block's spine point.
  std::pair<Block, bool> locate(const PointCode& p) const {
    const std::size_t i = parts_.size() == 1 ? 0 : p.n;
    const PointCode& local = parts_.size() == 1 ? p : p.child();
    const Piece& piece = pieces_[i];
    if (piece.along == Piece::Along::None) return {Block{}, false};
    const PointCode& outer = piece.atom ? local : local.outer();
    const PointCode inner = piece.atom ? PointCode::nat(0) : local.inner();
    Block b;
    bool onSpine = true;
    switch (piece.along) {
      case Piece::Along::Up: b = {Side::Pos, outer.a}; break;
      case Piece::Along::Down: b = {Side::Neg, outer.a}; break;
      default:
        b = {outer.u.side, outer.u.index};
        onSpine = outer.u.spine;
        break;
    }
    if (b.side == Side::Mid) return {b, false};
    return {b, onSpine && inner == piece.spineInner(b.side)};
  }

  // The source point sent to the spine point of b, if the source has one.
  std::optional<PointCode> spineSource(const Block& b) const {
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      const Piece& piece = pieces_[i];
      const bool matches = (piece.along == Piece::Along::Up && b.side == Side::Pos) ||
                           (piece.along == Piece::Along::Down && b.side == Side::Neg) ||
                           piece.along == Piece::Along::Line;
      if (!matches) continue;
      const auto inner = piece.spineInner(b.side);
      if (!inner) return std::nullopt;
      PointCode outer = piece.along == Piece::Along::Line ? PointCode::upoint(UPoint::spinePoint(b.side, b.index))
                                                         : PointCode::ordinal(b.index);
      PointCode code = piece.join(std::move(outer), *inner);
      return parts_.size() == 1 ? code : PointCode::part(i, std::move(code));
    }
    return std::nullopt;
  }

  // Order type of block b without its spine point.
  OrderTerm gapOrder(const Block& b) const {
    if (b.side == Side::Mid) {
      std::vector<OrderTerm> mid;
      for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (pieces_[i].along == Piece::Along::None) mid.push_back(parts_[i]);
        if (pieces_[i].along == Piece::Along::Line) mid.push_back(normalProduct(OrderTerm::atom(Kind::Rat), pieces_[i].fibre));
      }
      return normalSum(mid);
    }
    for (const auto& piece : pieces_) {
      const OrderTerm& c = piece.fibre;
      const bool pos = b.side == Side::Pos;
      OrderTerm rest = c;
      if (pos && hasFirst(c)) rest = detachFirst(c);
      if (!pos && hasLast(c)) rest = detachLast(c);
      if (piece.along == Piece::Along::Line) {
        const OrderTerm dense = normalProduct(OrderTerm::atom(Kind::Rat), c);
        return pos ? normalSum({rest, dense}) : normalSum({dense, rest});
      }
      if ((piece.along == Piece::Along::Up && pos) || (piece.along == Piece::Along::Down && !pos)) return rest;
    }
    return OrderTerm();
  }

 private:
  OrderTerm t_;
  std::vector<OrderTerm> parts_;
  std::vector<Piece> pieces_;
};

}  // namespace

std::optional<UPoint> EmbedCertificate::image(const PointCode& p) const {
  for (const auto& s : spine)
    if (s.source == p) return s.target;
  for (const auto& g : gaps)
    for (const auto& [code, q] : g.points)
      if (code == p) return UPoint::rational(g.side, g.index, q);
  return std::nullopt;
}

EmbedResult embedIntoU(const OrderTerm& input, std::size_t budget, std::uint64_t seed) {
  const OrderTerm t = normalize(input);
  const CondResult q = cc(t, Level::Countable);
  if (!q.quotient.is(Kind::Single))
    return {false, std::nullopt, "countable condensation is " + q.quotient.toString() + ", not a single class"};

  const Embedding e(t);
  const auto points = samplePoints(t, 128, seed);

  std::map<Block, std::vector<PointCode>> gapPoints;
  std::map<Block, bool> blocks;
  for (const auto& p : points) {
    const auto [b, onSpine] = e.locate(p);
    blocks[b] = true;
    if (!onSpine) gapPoints[b].push_back(p);
  }

  EmbedCertificate cert;
  cert.target = isCountable(t) ? "Q" : "U";
  cert.construction = e.construction();
  for (const auto& [b, unused] : blocks) {
    if (b.side != Side::Mid) cert.spine.push_back({e.spineSource(b), b.anchor()});
    auto it = gapPoints.find(b);
    if (it == gapPoints.end()) continue;
    const auto rationals = cantorEmbed(it->second, [&](const PointCode& x, const PointCode& y) {
      return comparePoints(t, x, y) < 0;
    });
    GapMap g{b.side, b.index, e.gapOrder(b), {}};
    for (std::size_t i = 0; i < rationals.size(); ++i) g.points.emplace_back(it->second[i], rationals[i]);
    cert.gaps.push_back(std::move(g));
  }

  if (points.empty()) return {true, cert, ""};
  Rng rng(seed ^ 0x51ed270b27f1c0a3ULL);
  for (std::size_t k = 0; k < budget; ++k) {
    const PointCode& x = points[rng.below(points.size())];
    const PointCode& y = points[rng.below(points.size())];
    const auto fx = cert.image(x);
    const auto fy = cert.image(y);
    if (!fx || !fy || compareU(*fx, *fy) != comparePoints(t, x, y))
      throw OrderError(ErrorKind::VerificationFailed, "embedding breaks the order at " + x.toString() + ", " + y.toString());
    ++cert.verifiedPairs;
  }
  return {true, cert, ""};
}

}  // namespace ordertype
