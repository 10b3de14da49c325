pub mod bound;
pub mod elmtrans;
pub mod examples;
pub mod krawtchouk;
pub mod table;
