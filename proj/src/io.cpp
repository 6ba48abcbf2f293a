#include "qk/io.hpp"

#include <sstream>

namespace qk {

namespace {

struct Tok {
  std::vector<std::string> words;
  int line;
};

std::vector<Tok> tokenize(const std::string& text) {
  std::vector<Tok> out;
  std::istringstream is(text);
  std::string line;
  int no = 0;
  while (std::getline(is, line)) {
    ++no;
    std::istringstream ls(line);
    Tok t;
    t.line = no;
    std::string w;
    while (ls >> w) t.words.push_back(w);
    if (!t.words.empty()) out.push_back(std::move(t));
  }
  return out;
}

[[noreturn]] void fail(int line, int col, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

int parse_int(const Tok& t, int w, int lo, int hi) {
  if (w >= (int)t.words.size()) fail(t.line, w + 1, "missing index");
  const std::string& s = t.words[w];
  for (char c : s)
    if (!isdigit(static_cast<unsigned char>(c))) fail(t.line, w + 1, "bad index '" + s + "'");
  int v = std::stoi(s);
  if (v < lo || v >= hi) fail(t.line, w + 1, "index " + s + " out of range");
  return v;
}

Scalar parse_scalar_at(const Field& f, const Tok& t, int w) {
  if (w >= (int)t.words.size()) fail(t.line, w + 1, "missing value");
  try {
    return Scalar::parse(f, t.words[w]);
  } catch (const Error& e) {
    fail(t.line, w + 1, e.what());
  }
}

void expect_eq(const Tok& t, int w) {
  if (w >= (int)t.words.size() || t.words[w] != "=") fail(t.line, w + 1, "expected '='");
}

// raw per-object data before assembly
struct RawObject {
  std::string kind, name, over, hash_claim;
  bool left_flag = false;
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<Tok> rows;
  std::pair<std::string, std::string> provenance;
  bool has_provenance = false;
  int line = 0;
};

SparseTensor rows_to_tensor(const Field& f, const std::vector<Tok>& rows,
                            const std::string& section, const Index& shape,
                            const std::vector<int>& axis_limits) {
  SparseTensor t(f, shape);
  for (const auto& r : rows) {
    if (r.words[0] != section) continue;
    Index idx;
    for (std::size_t a = 0; a < shape.size(); ++a)
      idx.push_back(parse_int(r, 1 + (int)a, 0, axis_limits[a]));
    expect_eq(r, 1 + (int)shape.size());
    Scalar v = parse_scalar_at(f, r, 2 + (int)shape.size());
    t.set(idx, v);
  }
  return t;
}

Vec rows_to_vector(const Field& f, const std::vector<Tok>& rows, const std::string& section,
                   int n) {
  Vec v(n, Scalar::zero(f));
  for (const auto& r : rows) {
    if (r.words[0] != section) continue;
    int i = parse_int(r, 1, 0, n);
    expect_eq(r, 2);
    v[i] = parse_scalar_at(f, r, 3);
  }
  return v;
}

}  // namespace

const Workspace::Entry* Workspace::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

const Workspace::Entry& Workspace::get(const std::string& name, const std::string& kind) const {
  const Entry* e = find(name);
  if (!e) throw ParseError("unknown reference '" + name + "'");
  if (!kind.empty() && e->kind != kind)
    throw ParseError("object '" + name + "' is a " + e->kind + ", expected " + kind);
  return *e;
}

Report validate_entry(const Workspace& ws, const Workspace::Entry& e) {
  Report rep;
  if (e.kind == "coalgebra") rep = check_coalgebra(*e.coalgebra);
  else if (e.kind == "dqb") rep = check_dqb(*e.dqb);
  else if (e.kind == "group") {
    rep.subject = "group cocycle data";
    try {
      e.group->validate();
      rep.pass("monoid table and 3-cocycle identity");
    } catch (const Error& err) {
      rep.fail("monoid table and 3-cocycle identity", err.what());
    }
  } else if (e.kind == "comodule") rep = check_comodule(*e.com);
  else if (e.kind == "yd") rep = check_yd(*e.yd);
  else if (e.kind == "braided") rep = check_braided_bialgebra(*e.braided);
  else if (e.kind == "trimodule") rep = check_trimodule(*e.trimodule);
  else if (e.kind == "crossed") rep = crossed_check(*e.crossed);
  else if (e.kind == "map") {
    rep.subject = "linear map";
    const auto* s = ws.find(e.map->src);
    const auto* d = ws.find(e.map->dst);
    if (!s || !d)
      rep.fail("endpoints resolve", "unknown endpoint");
    else
      rep.pass("endpoints resolve");
  }
  rep.subject = e.kind + " " + e.name;
  return rep;
}

Workspace parse_workspace(const std::string& text, const std::optional<Field>& fallback_field) {
  auto toks = tokenize(text);
  Workspace ws;
  bool field_seen = false;
  std::size_t i = 0;
  if (i < toks.size() && toks[i].words[0] == "field") {
    if (toks[i].words.size() != 2) fail(toks[i].line, 2, "expected 'field Q' or 'field F<p>'");
    try {
      ws.field = Field::parse(toks[i].words[1]);
    } catch (const Error& e) {
      fail(toks[i].line, 2, e.what());
    }
    field_seen = true;
    ++i;
  }
  if (!field_seen) {
    if (!fallback_field) throw ParseError("no 'field' line and no --field given");
    ws.field = *fallback_field;
  } else if (fallback_field && !(*fallback_field == ws.field)) {
    throw ParseError("--field " + fallback_field->str() + " conflicts with file field " +
                     ws.field.str());
  }
  const Field& F = ws.field;

  // group raw objects
  std::vector<RawObject> raws;
  for (; i < toks.size(); ++i) {
    const Tok& t = toks[i];
    const std::string& head = t.words[0];
    if (head == "object" || head == "map") {
      RawObject r;
      r.line = t.line;
      if (head == "map") {
        if (t.words.size() != 4) fail(t.line, 2, "expected 'map <name> <src> <dst>'");
        r.kind = "map";
        r.name = t.words[1];
        r.provenance = {t.words[2], t.words[3]};  // reused as (src,dst)
      } else {
        if (t.words.size() < 3) fail(t.line, 2, "expected 'object <kind> <name> ...'");
        r.kind = t.words[1];
        r.name = t.words[2];
        int w = 3;
        while (w < (int)t.words.size()) {
          const std::string& key = t.words[w];
          if (key == "over") {
            if (w + 1 >= (int)t.words.size()) fail(t.line, w + 2, "missing base name");
            r.over = t.words[w + 1];
            w += 2;
          } else if (key == "dim" || key == "order") {
            r.dim = parse_int(t, w + 1, 1, 1 << 20);
            w += 2;
          } else if (key == "hash") {
            if (w + 1 >= (int)t.words.size()) fail(t.line, w + 2, "missing hash");
            r.hash_claim = t.words[w + 1];
            w += 2;
          } else if (key == "left") {
            r.left_flag = true;
            ++w;
          } else if (key == "basis") {
            for (++w; w < (int)t.words.size(); ++w) r.basis.push_back(t.words[w]);
          } else {
            fail(t.line, w + 1, "unexpected token '" + key + "'");
          }
        }
        if (r.dim == 0) fail(t.line, 3, "missing dim/order");
        if (r.basis.empty())
          for (int b = 0; b < r.dim; ++b) r.basis.push_back("e" + std::to_string(b));
        if ((int)r.basis.size() != r.dim) fail(t.line, 3, "basis size differs from dim");
      }
      raws.push_back(std::move(r));
    } else if (head == "provenance") {
      if (raws.empty() || t.words.size() != 4 || t.words[1] != "bos")
        fail(t.line, 1, "stray provenance line");
      raws.back().provenance = {t.words[2], t.words[3]};
      raws.back().has_provenance = true;
    } else {
      if (raws.empty()) fail(t.line, 1, "entry before any object");
      raws.back().rows.push_back(t);
    }
  }

  for (const auto& r : raws) {
    Workspace::Entry e;
    e.kind = r.kind;
    e.name = r.name;
    e.over = r.over;
    e.hash_claim = r.hash_claim;
    if (ws.find(r.name)) throw ParseError("duplicate object name '" + r.name + "'");
    int n = r.dim;

    auto base_dqb = [&]() -> std::shared_ptr<DualQuasiBialgebra> {
      const auto& be = ws.get(r.over, "dqb");
      return be.dqb;
    };
    auto check_hash = [&](const Workspace::Entry& base) {
      if (e.hash_claim.empty()) return;
      std::string h = content_hash(serialize_entry(ws, base));
      if (h != e.hash_claim)
        throw ParseError("object '" + r.name + "': base hash mismatch (expected " + h + ")");
    };

    if (r.kind == "coalgebra" || r.kind == "dqb") {
      Coalgebra co;
      co.field = F;
      co.dim = n;
      co.labels = r.basis;
      co.delta = rows_to_tensor(F, r.rows, "delta", {n, n, n}, {n, n, n});
      co.counit = rows_to_vector(F, r.rows, "counit", n);
      if (r.kind == "coalgebra") {
        e.coalgebra = std::make_shared<Coalgebra>(std::move(co));
      } else {
        SparseTensor mult = rows_to_tensor(F, r.rows, "mult", {n, n, n}, {n, n, n});
        Vec unit = rows_to_vector(F, r.rows, "unit", n);
        // ω defaults to the counital value ε(x)ε(y)ε(z) on unlisted triples
        SparseTensor om(F, {n, n, n});
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
              Scalar v = co.counit[a] * co.counit[b] * co.counit[c];
              if (!v.is_zero()) om.set({a, b, c}, v);
            }
        for (const auto& row : r.rows) {
          if (row.words[0] != "omega") continue;
          int a = parse_int(row, 1, 0, n), b = parse_int(row, 2, 0, n), c = parse_int(row, 3, 0, n);
          expect_eq(row, 4);
          om.set({a, b, c}, parse_scalar_at(F, row, 5));
        }
        try {
          e.dqb = std::make_shared<DualQuasiBialgebra>(
              DualQuasiBialgebra::make(std::move(co), std::move(mult), std::move(unit), std::move(om)));
        } catch (const Error& err) {
          throw Error("object '" + r.name + "': " + err.what());
        }
        e.provenance = r.provenance;
        e.has_provenance = r.has_provenance;
      }
    } else if (r.kind == "group") {
      GroupCocycleData g;
      g.field = F;
      g.order = n;
      g.labels = r.basis;
      g.mul.assign(n, std::vector<int>(n, -1));
      for (int a = 0; a < n; ++a) {
        g.mul[0][a] = a;
        g.mul[a][0] = a;
      }
      g.theta.assign(n * n * n, Scalar::one(F));
      for (const auto& row : r.rows) {
        if (row.words[0] == "gmul") {
          int a = parse_int(row, 1, 0, n), b = parse_int(row, 2, 0, n);
          expect_eq(row, 3);
          g.mul[a][b] = parse_int(row, 4, 0, n);
        } else if (row.words[0] == "theta") {
          int a = parse_int(row, 1, 0, n), b = parse_int(row, 2, 0, n), c = parse_int(row, 3, 0, n);
          expect_eq(row, 4);
          g.theta_at(a, b, c) = parse_scalar_at(F, row, 5);
        } else {
          fail(row.line, 1, "unexpected section '" + row.words[0] + "' in group");
        }
      }
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (g.mul[a][b] < 0)
            throw ParseError("group '" + r.name + "': missing product " + std::to_string(a) +
                             "*" + std::to_string(b));
      e.group = std::make_shared<GroupCocycleData>(std::move(g));
    } else if (r.kind == "comodule") {
      if (r.over.empty()) fail(r.line, 1, "comodule object needs 'over <dqb>'");
      auto base = base_dqb();
      check_hash(ws.get(r.over, "dqb"));
      int hn = base->dim();
      Comodule V;
      V.over = base.get();
      V.dim = n;
      V.labels = r.basis;
      V.coaction = rows_to_tensor(F, r.rows, "coaction", {n, hn, n}, {n, hn, n});
      e.com = std::make_shared<Comodule>(std::move(V));
    } else if (r.kind == "yd" || r.kind == "braided") {
      if (r.over.empty()) fail(r.line, 1, r.kind + " object needs 'over <dqb>'");
      auto base = base_dqb();
      check_hash(ws.get(r.over, "dqb"));
      int hn = base->dim();
      YDModule V;
      V.com.over = base.get();
      V.com.dim = n;
      V.com.labels = r.basis;
      V.com.coaction = rows_to_tensor(F, r.rows, "coaction", {n, hn, n}, {n, hn, n});
      V.action = rows_to_tensor(F, r.rows, "action", {hn, n, n}, {hn, n, n});
      if (r.kind == "yd") {
        e.yd = std::make_shared<YDModule>(std::move(V));
      } else {
        BraidedBialgebra R;
        R.carrier = std::move(V);
        R.m = rows_to_tensor(F, r.rows, "mr", {n, n, n}, {n, n, n});
        R.u = rows_to_vector(F, r.rows, "ur", n);
        R.delta = rows_to_tensor(F, r.rows, "deltar", {n, n, n}, {n, n, n});
        R.eps = rows_to_vector(F, r.rows, "epsr", n);
        e.braided = std::make_shared<BraidedBialgebra>(std::move(R));
      }
    } else if (r.kind == "trimodule") {
      if (r.over.empty()) fail(r.line, 1, "trimodule object needs 'over <dqb>'");
      auto base = base_dqb();
      check_hash(ws.get(r.over, "dqb"));
      int hn = base->dim();
      Trimodule M;
      M.over = base.get();
      M.dim = n;
      M.labels = r.basis;
      M.l_coaction = rows_to_tensor(F, r.rows, "lcoaction", {n, hn, n}, {n, hn, n});
      M.r_coaction = rows_to_tensor(F, r.rows, "rcoaction", {n, n, hn}, {n, n, hn});
      M.r_action = rows_to_tensor(F, r.rows, "raction", {n, hn, n}, {n, hn, n});
      if (r.left_flag)
        M.l_action = rows_to_tensor(F, r.rows, "laction", {hn, n, n}, {hn, n, n});
      e.trimodule = std::make_shared<Trimodule>(std::move(M));
    } else if (r.kind == "crossed") {
      if (r.over.empty()) fail(r.line, 1, "crossed object needs 'over <group>'");
      const auto& be = ws.get(r.over, "group");
      check_hash(be);
      int o = be.group->order;
      CrossedGModule V;
      V.group = be.group.get();
      V.dim = n;
      V.labels = r.basis;
      V.grade.assign(n, 0);
      for (const auto& row : r.rows) {
        if (row.words[0] != "grade") continue;
        int v = parse_int(row, 1, 0, n);
        expect_eq(row, 2);
        V.grade[v] = parse_int(row, 3, 0, o);
      }
      for (int h = 0; h < o; ++h) V.action.push_back(Matrix(F, n, n));
      for (const auto& row : r.rows) {
        if (row.words[0] != "craction") continue;
        int h = parse_int(row, 1, 0, o), a = parse_int(row, 2, 0, n), b = parse_int(row, 3, 0, n);
        expect_eq(row, 4);
        V.action[h].at(b, a) = parse_scalar_at(F, row, 5);
      }
      e.crossed = std::make_shared<CrossedGModule>(std::move(V));
    } else if (r.kind == "map") {
      MapObject m;
      m.src = r.provenance.first;
      m.dst = r.provenance.second;
      auto dim_of = [&](const std::string& name) -> int {
        const auto* ent = ws.find(name);
        if (!ent) throw ParseError("map '" + r.name + "': unknown endpoint '" + name + "'");
        if (ent->dqb) return ent->dqb->dim();
        if (ent->coalgebra) return ent->coalgebra->dim;
        if (ent->com) return ent->com->dim;
        if (ent->yd) return ent->yd->dim();
        if (ent->braided) return ent->braided->dim();
        if (ent->trimodule) return ent->trimodule->dim;
        if (ent->crossed) return ent->crossed->dim;
        throw ParseError("map '" + r.name + "': endpoint '" + name + "' has no dimension");
      };
      int sd = dim_of(m.src), dd = dim_of(m.dst);
      m.matrix = Matrix(F, dd, sd);
      for (const auto& row : r.rows) {
        if (row.words[0] != "entry") fail(row.line, 1, "maps only take 'entry i j = v' rows");
        int a = parse_int(row, 1, 0, dd), b = parse_int(row, 2, 0, sd);
        expect_eq(row, 3);
        m.matrix.at(a, b) = parse_scalar_at(F, row, 4);
      }
      e.map = std::make_shared<MapObject>(std::move(m));
    } else {
      fail(r.line, 2, "unknown object kind '" + r.kind + "'");
    }
    // unknown sections
    static const std::map<std::string, std::vector<std::string>> allowed = {
        {"coalgebra", {"delta", "counit"}},
        {"dqb", {"delta", "counit", "mult", "unit", "omega"}},
        {"group", {"gmul", "theta"}},
        {"comodule", {"coaction"}},
        {"yd", {"coaction", "action"}},
        {"braided", {"coaction", "action", "mr", "ur", "deltar", "epsr"}},
        {"trimodule", {"lcoaction", "rcoaction", "raction", "laction"}},
        {"crossed", {"grade", "craction"}},
        {"map", {"entry"}}};
    const auto& ok = allowed.at(r.kind);
    for (const auto& row : r.rows)
      if (std::find(ok.begin(), ok.end(), row.words[0]) == ok.end())
        fail(row.line, 1, "section '" + row.words[0] + "' not allowed in " + r.kind);

    ws.entries.push_back(std::move(e));
    // full type validation at load
    Report rep = validate_entry(ws, ws.entries.back());
    if (!rep.ok()) {
      const CheckRecord* f = rep.first_failure();
      throw Error("object '" + r.name + "' fails " + f->name +
                  (f->witness.empty() ? "" : " [" + f->witness + "]"));
    }
  }
  return ws;
}

namespace {
void emit_tensor(std::ostringstream& os, const std::string& section, const SparseTensor& t) {
  for (const auto& [k, v] : t.entries()) {
    os << section;
    for (int x : k) os << " " << x;
    os << " = " << v.str() << "\n";
  }
}
void emit_vector(std::ostringstream& os, const std::string& section, const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) os << section << " " << i << " = " << v[i].str() << "\n";
}
}  // namespace

std::string serialize_entry(const Workspace& ws, const Workspace::Entry& e) {
  std::ostringstream os;
  auto header = [&](const std::string& kind, const std::string& name, int dim,
                    const std::vector<std::string>& basis, const std::string& over,
                    const std::string& extra) {
    os << "object " << kind << " " << name;
    if (!over.empty()) os << " over " << over;
    os << (kind == "group" ? " order " : " dim ") << dim;
    if (!extra.empty()) os << " " << extra;
    os << " basis";
    for (const auto& b : basis) os << " " << b;
    os << "\n";
  };
  if (e.kind == "coalgebra") {
    header("coalgebra", e.name, e.coalgebra->dim, e.coalgebra->labels, "", "");
    emit_tensor(os, "delta", e.coalgebra->delta);
    emit_vector(os, "counit", e.coalgebra->counit);
  } else if (e.kind == "dqb") {
    const auto& H = *e.dqb;
    header("dqb", e.name, H.dim(), H.co.labels, "", "");
    emit_tensor(os, "delta", H.co.delta);
    emit_vector(os, "counit", H.co.counit);
    emit_tensor(os, "mult", H.mult);
    emit_vector(os, "unit", H.unit);
    // only the entries that differ from the counital default
    for (int a = 0; a < H.dim(); ++a)
      for (int b = 0; b < H.dim(); ++b)
        for (int c = 0; c < H.dim(); ++c) {
          Scalar dflt = H.co.counit[a] * H.co.counit[b] * H.co.counit[c];
          Scalar v = H.omega_at(a, b, c);
          if (!(v == dflt)) os << "omega " << a << " " << b << " " << c << " = " << v.str() << "\n";
        }
    if (e.has_provenance)
      os << "provenance bos " << e.provenance.first << " " << e.provenance.second << "\n";
  } else if (e.kind == "group") {
    const auto& g = *e.group;
    header("group", e.name, g.order, g.labels, "", "");
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b)
        if (!(a == 0 || b == 0))  // unit row/column implied
          os << "gmul " << a << " " << b << " = " << g.mul[a][b] << "\n";
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b)
        for (int c = 0; c < g.order; ++c)
          if (!g.theta_at(a, b, c).is_one())
            os << "theta " << a << " " << b << " " << c << " = " << g.theta_at(a, b, c).str()
               << "\n";
  } else if (e.kind == "comodule") {
    std::string hash = content_hash(serialize_entry(ws, ws.get(e.over, "dqb")));
    header("comodule", e.name, e.com->dim, e.com->labels, e.over, "hash " + hash);
    emit_tensor(os, "coaction", e.com->coaction);
  } else if (e.kind == "yd" || e.kind == "braided") {
    const YDModule& V = e.kind == "yd" ? *e.yd : e.braided->carrier;
    std::string hash = content_hash(serialize_entry(ws, ws.get(e.over, "dqb")));
    header(e.kind, e.name, V.dim(), V.com.labels, e.over, "hash " + hash);
    emit_tensor(os, "coaction", V.com.coaction);
    emit_tensor(os, "action", V.action);
    if (e.kind == "braided") {
      emit_tensor(os, "mr", e.braided->m);
      emit_vector(os, "ur", e.braided->u);
      emit_tensor(os, "deltar", e.braided->delta);
      emit_vector(os, "epsr", e.braided->eps);
    }
  } else if (e.kind == "trimodule") {
    const auto& M = *e.trimodule;
    std::string hash = content_hash(serialize_entry(ws, ws.get(e.over, "dqb")));
    header("trimodule", e.name, M.dim, M.labels, e.over,
           std::string(M.four() ? "left " : "") + "hash " + hash);
    emit_tensor(os, "lcoaction", M.l_coaction);
    emit_tensor(os, "rcoaction", M.r_coaction);
    emit_tensor(os, "raction", M.r_action);
    if (M.four()) emit_tensor(os, "laction", *M.l_action);
  } else if (e.kind == "crossed") {
    const auto& V = *e.crossed;
    std::string hash = content_hash(serialize_entry(ws, ws.get(e.over, "group")));
    header("crossed", e.name, V.dim, V.labels, e.over, "hash " + hash);
    for (int v = 0; v < V.dim; ++v)
      if (V.grade[v] != 0) os << "grade " << v << " = " << V.grade[v] << "\n";
    for (int h = 0; h < (int)V.action.size(); ++h)
      for (int j = 0; j < V.dim; ++j)
        for (int i = 0; i < V.dim; ++i)
          if (!V.action[h].at(i, j).is_zero())
            os << "craction " << h << " " << j << " " << i << " = " << V.action[h].at(i, j).str()
               << "\n";
  } else if (e.kind == "map") {
    os << "map " << e.name << " " << e.map->src << " " << e.map->dst << "\n";
    for (int a = 0; a < e.map->matrix.rows(); ++a)
      for (int b = 0; b < e.map->matrix.cols(); ++b)
        if (!e.map->matrix.at(a, b).is_zero())
          os << "entry " << a << " " << b << " = " << e.map->matrix.at(a, b).str() << "\n";
  }
  return os.str();
}

std::string serialize_workspace(const Workspace& ws) {
  std::ostringstream os;
  os << "field " << ws.field.str() << "\n";
  for (const auto& e : ws.entries) {
    os << "\n";
    os << serialize_entry(ws, e);
  }
  return os.str();
}

std::string content_hash(const std::string& canonical_text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical_text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace qk
