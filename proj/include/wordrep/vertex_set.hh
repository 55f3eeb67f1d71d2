#ifndef WORDREP_GUARD_WORDREP_VERTEX_SET_HH
#define WORDREP_GUARD_WORDREP_VERTEX_SET_HH 1

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace wordrep
{
    /// A fixed-capacity set of vertex indices, stored as a packed bit vector.
    class VertexSet
    {
    private:
        std::vector<std::uint64_t> _words;
        std::size_t _capacity = 0;

    public:
        static constexpr std::size_t npos = static_cast<std::size_t>(-1);

        VertexSet() = default;

        explicit VertexSet(std::size_t capacity) :
            _words((capacity + 63) / 64, 0),
            _capacity(capacity)
        {
        }

        auto capacity() const -> std::size_t { return _capacity; }

        auto set(std::size_t i) -> void { _words[i / 64] |= (std::uint64_t{1} << (i % 64)); }
        auto reset(std::size_t i) -> void { _words[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
        auto test(std::size_t i) const -> bool { return (_words[i / 64] >> (i % 64)) & 1; }

        auto clear() -> void
        {
            for (auto & w : _words)
                w = 0;
        }

        auto count() const -> std::size_t
        {
            std::size_t result = 0;
            for (auto w : _words)
                result += std::popcount(w);
            return result;
        }

        auto empty() const -> bool
        {
            for (auto w : _words)
                if (w)
                    return false;
            return true;
        }

        auto first() const -> std::size_t
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i])
                    return i * 64 + std::countr_zero(_words[i]);
            return npos;
        }

        /// Smallest member strictly greater than i, or npos.
        auto next(std::size_t i) const -> std::size_t
        {
            ++i;
            if (i >= _capacity)
                return npos;
            std::size_t wi = i / 64;
            std::uint64_t w = _words[wi] & (~std::uint64_t{0} << (i % 64));
            while (true) {
                if (w)
                    return wi * 64 + std::countr_zero(w);
                if (++wi == _words.size())
                    return npos;
                w = _words[wi];
            }
        }

        auto operator|=(const VertexSet & other) -> VertexSet &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] |= other._words[i];
            return *this;
        }

        auto operator&=(const VertexSet & other) -> VertexSet &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= other._words[i];
            return *this;
        }

        auto subtract(const VertexSet & other) -> VertexSet &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= ~other._words[i];
            return *this;
        }

        auto intersects(const VertexSet & other) const -> bool
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i] & other._words[i])
                    return true;
            return false;
        }

        /// First member of (this & a & ~b), or npos; allocation free.
        auto first_in_and_not(const VertexSet & a, const VertexSet & b) const -> std::size_t
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (auto w = _words[i] & a._words[i] & ~b._words[i])
                    return i * 64 + std::countr_zero(w);
            return npos;
        }

        auto operator==(const VertexSet &) const -> bool = default;

        template <typename F>
        auto for_each(F && f) const -> void
        {
            for (std::size_t wi = 0; wi < _words.size(); ++wi) {
                auto w = _words[wi];
                while (w) {
                    f(wi * 64 + std::countr_zero(w));
                    w &= w - 1;
                }
            }
        }
    };

    inline auto operator&(VertexSet a, const VertexSet & b) -> VertexSet
    {
        a &= b;
        return a;
    }

    inline auto operator|(VertexSet a, const VertexSet & b) -> VertexSet
    {
        a |= b;
        return a;
    }
}

#endif
