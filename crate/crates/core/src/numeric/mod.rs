pub(crate) mod dd;
pub(crate) mod quad;
