#pragma once

// Lets doctest print intervals and module sums in failure messages.

#include "dexact/quiver.hpp"

#include <doctest.h>

#include <optional>

namespace doctest {

template <>
struct StringMaker<dexact::Interval> {
    static String convert(const dexact::Interval& m) { return m.str().c_str(); }
};

template <>
struct StringMaker<dexact::ModuleSum> {
    static String convert(const dexact::ModuleSum& m) { return m.str().c_str(); }
};

template <class T>
struct StringMaker<std::optional<T>> {
    static String convert(const std::optional<T>& m) { return m ? StringMaker<T>::convert(*m) : String("none"); }
};

} // namespace doctest
