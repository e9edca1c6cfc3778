#include "hodgkin/torring.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "hodgkin/parallel.hpp"

namespace hodgkin::torring {

namespace {

IntVector block(const IntVector& chain, std::size_t s, std::size_t m)
{
    return IntVector(chain.begin() + static_cast<std::ptrdiff_t>(s * m),
                     chain.begin() + static_cast<std::ptrdiff_t>((s + 1) * m));
}

bool all_zero(const IntVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x.is_zero(); });
}

std::string mask_name(unsigned mask)
{
    std::string s = "z_{";
    bool first = true;
    for (unsigned i = 0; i < 32; ++i)
        if (mask & (1u << i)) {
            s += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        }
    return s + "}";
}

// z_S for every subset, degree by degree: z_S = z_{S - max} * z_max.
std::vector<std::map<unsigned, TorClass>> all_monomials(const TorContext& ctx, const std::vector<Generator>& gens,
                                                        unsigned threads)
{
    const std::size_t n = ctx.n();
    std::vector<std::map<unsigned, TorClass>> out(n + 1);
    out[0].emplace(0u, ctx.unit());
    for (std::size_t p = 1; p <= n; ++p) {
        const auto& masks = ctx.wedge(p);
        std::vector<TorClass> classes(masks.size());
        parallel_for(masks.size(), threads, [&](std::size_t k) {
            const unsigned mask = masks[k];
            const unsigned top = 31u - static_cast<unsigned>(std::countl_zero(mask));
            const TorClass& prefix = out[p - 1].at(mask & ~(1u << top));
            classes[k] = multiply_by_generator(ctx, prefix, gens[top]);
        });
        for (std::size_t k = 0; k < masks.size(); ++k)
            out[p].emplace(masks[k], std::move(classes[k]));
    }
    return out;
}

}  // namespace

TorContext::TorContext(const FlagKModule& module, homology::HomologyOptions options)
    : module_(&module),
      n_(static_cast<std::size_t>(module.lattice_rank())),
      m_(module.rank()),
      complex_(homology::koszul_complex(n_, module.mult_matrices())),
      homology_(homology::homology_of(complex_, options, &audit_))
{
    for (std::size_t p = 0; p <= n_; ++p)
        wedges_.push_back(homology::wedge_basis(n_, p));
}

std::size_t TorContext::wedge_index(std::size_t p, unsigned mask) const
{
    const auto& w = wedges_.at(p);
    auto it = std::find(w.begin(), w.end(), mask);
    if (it == w.end())
        throw PreconditionError("wedge_index: subset not of degree " + std::to_string(p));
    return static_cast<std::size_t>(it - w.begin());
}

TorClass TorContext::make_class(std::size_t degree, IntVector chain) const
{
    if (degree > n_)
        return overflow_class(degree);
    if (chain.size() != complex_.ranks()[degree])
        throw PreconditionError("make_class: chain has the wrong length for degree " + std::to_string(degree));
    if (degree > 0 && !all_zero(complex_.d(degree) * chain))
        throw DefectError("make_class: chain of degree " + std::to_string(degree) + " is not a cycle");
    TorClass c;
    c.degree = degree;
    c.homology_coords = homology_.degrees[degree].reduce(chain);
    c.chain = std::move(chain);
    return c;
}

TorClass TorContext::unit() const
{
    return make_class(0, module_->unit_coords());
}

TorClass TorContext::overflow_class(std::size_t degree) const
{
    TorClass c;
    c.degree = degree;
    return c;
}

int wedge_sign(unsigned s, unsigned t)
{
    if (s & t)
        return 0;
    int inversions = 0;
    for (unsigned j = 0; j < 32; ++j)
        if (t & (1u << j))
            inversions += std::popcount(j == 31 ? 0u : (s >> (j + 1)));
    return inversions % 2 ? -1 : 1;
}

TorClass chain_product(const TorContext& ctx, const TorClass& a, const TorClass& b)
{
    const std::size_t degree = a.degree + b.degree;
    if (degree > ctx.n() || a.overflow() || b.overflow())
        return ctx.overflow_class(degree);
    const std::size_t m = ctx.m();
    if (a.chain.size() != ctx.wedge(a.degree).size() * m || b.chain.size() != ctx.wedge(b.degree).size() * m)
        throw PreconditionError("chain_product: classes do not belong to this module");
    const auto& wa = ctx.wedge(a.degree);
    const auto& wb = ctx.wedge(b.degree);
    IntVector out(ctx.wedge(degree).size() * m);
    for (std::size_t s = 0; s < wa.size(); ++s) {
        IntVector x = block(a.chain, s, m);
        if (all_zero(x))
            continue;
        for (std::size_t t = 0; t < wb.size(); ++t) {
            const int sign = wedge_sign(wa[s], wb[t]);
            if (!sign)
                continue;
            IntVector y = block(b.chain, t, m);
            if (all_zero(y))
                continue;
            IntVector xy = ctx.module().multiply(x, y);
            const std::size_t u = ctx.wedge_index(degree, wa[s] | wb[t]);
            for (std::size_t k = 0; k < m; ++k)
                if (!xy[k].is_zero())
                    out[u * m + k] += sign * xy[k];
        }
    }
    return ctx.make_class(degree, std::move(out));
}

TorClass multiply_by_generator(const TorContext& ctx, const TorClass& a, const Generator& z)
{
    const std::size_t degree = a.degree + 1;
    if (degree > ctx.n() || a.overflow())
        return ctx.overflow_class(degree);
    const std::size_t m = ctx.m();
    const auto& wa = ctx.wedge(a.degree);
    IntVector out(ctx.wedge(degree).size() * m);
    for (std::size_t s = 0; s < wa.size(); ++s) {
        IntVector x = block(a.chain, s, m);
        if (all_zero(x))
            continue;
        for (std::size_t j = 0; j < ctx.n(); ++j) {
            const int sign = wedge_sign(wa[s], 1u << j);
            if (!sign || z.c[j].is_zero())
                continue;
            IntVector xy = ctx.module().act(z.c[j], x);
            const std::size_t u = ctx.wedge_index(degree, wa[s] | (1u << j));
            for (std::size_t k = 0; k < m; ++k)
                if (!xy[k].is_zero())
                    out[u * m + k] += sign * xy[k];
        }
    }
    return ctx.make_class(degree, std::move(out));
}

std::vector<Generator> change_of_rings_generators(const CharacterSet& chars, const TorContext& ctx)
{
    const std::size_t n = ctx.n(), m = ctx.m();
    if (chars.reduced.size() != n)
        throw PreconditionError("change_of_rings_generators: character set has the wrong rank");
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Generator g;
        g.c = laurent::decompose_augmentation_ideal(chars.reduced[i]);
        IntVector chain(n * m);
        for (std::size_t j = 0; j < n; ++j) {
            IntVector x = ctx.module().coords(g.c[j]);
            std::copy(x.begin(), x.end(), chain.begin() + static_cast<std::ptrdiff_t>(j * m));
        }
        try {
            g.z = ctx.make_class(1, std::move(chain));
        } catch (const DefectError&) {
            throw DefectError("generator z_" + std::to_string(i + 1) +
                              " is not a cycle: the character relations are inconsistent");
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

IntMatrix monomial_coordinates(const TorContext& ctx, const std::vector<Generator>& gens, std::size_t p)
{
    auto monomials = all_monomials(ctx, gens, 1);
    const auto& masks = ctx.wedge(p);
    const std::size_t g = ctx.homology().degrees[p].generators();
    IntMatrix c(masks.size(), g);
    for (std::size_t k = 0; k < masks.size(); ++k) {
        const IntVector& h = monomials[p].at(masks[k]).homology_coords;
        for (std::size_t j = 0; j < g; ++j)
            c(k, j) = h[j];
    }
    return c;
}

ExteriorCertificate certify_exterior(const TorContext& ctx, const std::vector<Generator>& gens, unsigned threads)
{
    ExteriorCertificate cert;
    const std::size_t n = ctx.n();
    if (gens.size() != n)
        throw PreconditionError("certify_exterior: expected " + std::to_string(n) + " generators");
    auto monomials = all_monomials(ctx, gens, threads);

    cert.determinants_unimodular = true;
    for (std::size_t p = 0; p <= n; ++p) {
        const auto& hp = ctx.homology().degrees[p];
        const auto& masks = ctx.wedge(p);
        DegreeCertificate d;
        d.degree = p;
        d.rank = hp.betti;
        if (!hp.torsion.empty() || hp.generators() != masks.size()) {
            cert.determinants_unimodular = false;
            if (cert.witness.empty())
                cert.witness = "degree " + std::to_string(p) + ": " + std::to_string(masks.size()) +
                               " monomials for " + std::to_string(hp.generators()) + " homology generators";
            cert.degrees.push_back(d);
            continue;
        }
        IntMatrix c(masks.size(), masks.size());
        for (std::size_t k = 0; k < masks.size(); ++k) {
            const IntVector& h = monomials[p].at(masks[k]).homology_coords;
            std::copy(h.begin(), h.end(), c.row(k));
        }
        d.determinant = determinant(c);
        if (d.determinant != 1 && d.determinant != -1) {
            cert.determinants_unimodular = false;
            if (cert.witness.empty())
                cert.witness = "degree " + std::to_string(p) + ": det = " + d.determinant.str();
        }
        cert.degrees.push_back(d);
    }

    cert.anticommute = true;
    cert.squares_zero = true;
    cert.routes_compared = ctx.module().has_dense_table();
    for (std::size_t i = 0; i < n; ++i) {
        TorClass sq = multiply_by_generator(ctx, gens[i].z, gens[i]);
        if (!sq.overflow() && !all_zero(sq.homology_coords)) {
            cert.squares_zero = false;
            if (cert.witness.empty())
                cert.witness = "z_" + std::to_string(i + 1) + " * z_" + std::to_string(i + 1) + " != 0";
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (cert.routes_compared) {
                TorClass direct = chain_product(ctx, gens[i].z, gens[j].z);
                TorClass via = multiply_by_generator(ctx, gens[i].z, gens[j]);
                if (direct.chain != via.chain) {
                    cert.product_routes_agree = false;
                    if (cert.witness.empty())
                        cert.witness = "chain products of z_" + std::to_string(i + 1) + " and z_" +
                                       std::to_string(j + 1) + " differ between routes";
                }
            }
            if (j <= i)
                continue;
            TorClass ij = multiply_by_generator(ctx, gens[i].z, gens[j]);
            TorClass ji = multiply_by_generator(ctx, gens[j].z, gens[i]);
            if (ij.overflow())
                continue;
            IntVector sum = ij.chain;
            for (std::size_t k = 0; k < sum.size(); ++k)
                sum[k] += ji.chain[k];
            if (!all_zero(ctx.homology().degrees[2].reduce(sum))) {
                cert.anticommute = false;
                if (cert.witness.empty())
                    cert.witness = mask_name((1u << i) | (1u << j)) + ": z_i z_j + z_j z_i != 0";
            }
        }
    }
    return cert;
}

}  // namespace hodgkin::torring
