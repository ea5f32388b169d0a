"""Langfuse integration module"""
