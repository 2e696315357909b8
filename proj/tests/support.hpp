#pragma once

#include <irrmeasure/error.hpp>

#include <optional>

// Code of the irrmeasure::Error thrown by f, or nullopt if nothing was thrown.
template <class F>
std::optional<irrmeasure::ErrorCode> thrown_code(F&& f) {
    try {
        f();
    } catch (const irrmeasure::Error& e) {
        return e.code();
    }
    return std::nullopt;
}
